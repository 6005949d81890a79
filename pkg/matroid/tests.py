import random
import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from coxeter.roots import build_root_system
from coxeter.types import parse_type

from .cache import cache_path, deserialize_gamma, load_or_build_gamma, read_gamma, serialize_gamma
from .exceptions import GammaCacheError
from .gamma import build_gamma, enumerate_basis, gamma_to_dot, nbc_member, path_count
from .orders import ReflectionOrder, resolve_order
from .rank import can_extend, circuit_extension, circuits, dependency, is_nbc, naive_nbc_basis, rank, span_of


def setup(text, selector="default"):
    rs = build_root_system(parse_type(text))
    return rs, resolve_order(rs, selector)


class ReflectionOrderTests(SimpleTestCase):
    def test_default_is_construction_order(self):
        rs, order = setup("A3")
        self.assertEqual(order.sequence, (1, 2, 3, 4, 5, 6))

    def test_named_a3_order_matches_construction_order(self):
        rs, order = setup("A3", "paper-a3")
        self.assertEqual(order.sequence, (1, 2, 3, 4, 5, 6))

    def test_named_a3_order_rejects_other_types(self):
        rs = build_root_system(parse_type("B3"))
        with self.assertRaises(ValueError):
            ReflectionOrder.paper_a3(rs)

    def test_simples_last(self):
        rs, order = setup("B3", "simples-last")
        self.assertEqual(order.sequence[-3:], rs.simple_index)
        self.assertEqual(sorted(order.sequence), list(range(1, 10)))

    def test_explicit_sequence(self):
        rs, order = setup("A2", "3,1,2")
        self.assertEqual(order.sequence, (3, 1, 2))
        self.assertEqual(order.position(3), 1)
        self.assertEqual(order.reflection(2), 1)

    def test_invalid_sequences(self):
        rs = build_root_system(parse_type("A2"))
        for selector in ("1,2", "1,1,2", "1,2,4", "bogus"):
            with self.assertRaises(ValueError):
                resolve_order(rs, selector)


class RankTests(SimpleTestCase):
    def test_examples(self):
        rs, order = setup("A3", "paper-a3")
        self.assertEqual(rank(rs, order, []), 0)
        self.assertEqual(rank(rs, order, [1, 2, 4]), 2)
        for p in range(1, 7):
            self.assertEqual(rank(rs, order, [p]), 1)

    def test_dihedral_rank(self):
        rs, order = setup("I2(7)")
        self.assertEqual(rank(rs, order, [1, 2, 3, 4]), 2)
        self.assertEqual(rank(rs, order, [5]), 1)

    def test_mixed_dihedral_factor(self):
        # positions 1..5 are I2(5), 6..8 are A2
        rs, order = setup("I2(5)xA2")
        self.assertEqual(rank(rs, order, [1, 6]), 2)
        self.assertEqual(rank(rs, order, [1, 2, 3, 6, 7, 8]), 4)
        self.assertEqual(span_of(rs, order, (1,)).flat(), frozenset({1}))
        self.assertEqual(span_of(rs, order, (1, 6)).flat(), frozenset({1, 6}))
        self.assertEqual(len(span_of(rs, order, (1, 4)).flat()), 5)
        self.assertEqual(dependency(rs, order, (1, 6, 7), 8), {6: 1, 7: 1})
        self.assertIsNone(dependency(rs, order, (1, 6), 7))
        self.assertEqual(circuit_extension(rs, order, (6, 7)), 8)
        self.assertEqual(circuit_extension(rs, order, (1, 2)), 5)
        self.assertIsNone(circuit_extension(rs, order, (1, 6, 7)))
        self.assertTrue(is_nbc(rs, order, (1, 6, 8)))
        self.assertFalse(is_nbc(rs, order, (1, 6, 7)))

    def test_monotone_and_submodular(self):
        rs, order = setup("B3")
        rng = random.Random(17)
        for _ in range(40):
            a = set(rng.sample(range(1, 10), rng.randint(0, 5)))
            b = set(rng.sample(range(1, 10), rng.randint(0, 5)))
            ra, rb = rank(rs, order, sorted(a)), rank(rs, order, sorted(b))
            self.assertLessEqual(ra, rank(rs, order, sorted(a | b)))
            self.assertLessEqual(
                rank(rs, order, sorted(a | b)) + rank(rs, order, sorted(a & b)),
                ra + rb,
            )

    def test_circuit_extension(self):
        rs, order = setup("A3", "paper-a3")
        self.assertEqual(circuit_extension(rs, order, (1, 2)), 4)
        self.assertEqual(circuit_extension(rs, order, (2, 4, 5)), 6)
        self.assertIsNone(circuit_extension(rs, order, (3,)))

    def test_can_extend(self):
        rs, order = setup("A3", "paper-a3")
        self.assertTrue(can_extend(rs, order, (2, 4), 6))
        self.assertFalse(can_extend(rs, order, (2, 4), 5))
        for m in range(1, 7):
            self.assertTrue(can_extend(rs, order, (), m))

    def test_direct_membership(self):
        rs, order = setup("A3", "paper-a3")
        self.assertTrue(is_nbc(rs, order, (2, 4, 6)))
        self.assertFalse(is_nbc(rs, order, (2, 4, 5)))
        with self.assertRaises(ValueError):
            is_nbc(rs, order, (4, 2))

    def test_a3_circuits(self):
        rs, order = setup("A3", "paper-a3")
        found = circuits(rs, order)
        self.assertIn((1, 2, 4), found)
        self.assertIn((2, 4, 5, 6), found)
        # four triangles and three 4-cycles of K4
        self.assertEqual(len(found), 7)


class BasisGraphTests(SimpleTestCase):
    def test_a3_named_order_graph(self):
        rs, order = setup("A3", "paper-a3")
        graph = build_gamma(rs, order)
        self.assertEqual(graph.node_count, 9)
        self.assertEqual(path_count(graph), 24)
        self.assertEqual(len(list(enumerate_basis(graph))), 24)

    def test_a3_membership(self):
        rs, order = setup("A3", "paper-a3")
        graph = build_gamma(rs, order)
        self.assertTrue(nbc_member(graph, ()))
        self.assertTrue(nbc_member(graph, (2,)))
        self.assertTrue(nbc_member(graph, (2, 4)))
        self.assertTrue(nbc_member(graph, (2, 4, 6)))
        self.assertFalse(nbc_member(graph, (2, 4, 5)))
        with self.assertRaises(ValueError):
            nbc_member(graph, (2, 2))

    def test_a2_degree_two_words(self):
        rs, order = setup("A2")
        graph = build_gamma(rs, order)
        self.assertEqual(list(enumerate_basis(graph, 2)), [(1, 3), (2, 3)])
        self.assertEqual(list(enumerate_basis(graph, 0)), [()])

    def test_basis_size_is_group_order(self):
        types = ["A2", "A3", "B2", "B3", "D4", "H3", "F4"] + [f"I2({m})" for m in range(3, 9)]
        for text in types:
            rs, order = setup(text)
            self.assertEqual(build_gamma(rs, order).path_count(), rs.order, text)

    def test_basis_size_with_dihedral_factor_first(self):
        for text in ("A2xI2(4)", "I2(5)xA2", "I2(4)xB2", "I2(3)xI2(5)"):
            for selector in ("default", "simples-last"):
                rs, order = setup(text, selector)
                self.assertEqual(build_gamma(rs, order).path_count(), rs.order, (text, selector))

    def test_language_matches_definition(self):
        for text in ("A2", "A3", "B2", "B3", "D4", "I2(5)", "I2(8)", "A1xA2", "A2xI2(4)", "I2(5)xA2"):
            for selector in ("default", "simples-last"):
                rs, order = setup(text, selector)
                graph = build_gamma(rs, order)
                self.assertEqual(list(enumerate_basis(graph)), naive_nbc_basis(rs, order), (text, selector))

    def test_enumeration_is_lexicographic_and_prefix_closed(self):
        for text in ("B3", "H3", "I2(6)"):
            rs, order = setup(text)
            graph = build_gamma(rs, order)
            words = list(enumerate_basis(graph))
            self.assertEqual(words, sorted(words))
            members = set(words)
            for word in words:
                for k in range(len(word)):
                    self.assertIn(word[:k], members)

    def test_edges_increase_labels(self):
        rs, order = setup("F4")
        graph = build_gamma(rs, order)
        self.assertEqual(graph.labels[0], 0)
        for node, kids in enumerate(graph.children):
            for child in kids:
                self.assertLess(graph.labels[node], graph.labels[child])

    def test_deterministic(self):
        rs, order = setup("B3", "simples-last")
        first, second = build_gamma(rs, order), build_gamma(rs, order)
        self.assertEqual((first.node_count, first.edge_count), (second.node_count, second.edge_count))
        self.assertEqual(first, second)

    def test_graph_agrees_with_direct_membership(self):
        rs, order = setup("H3")
        graph = build_gamma(rs, order)
        rng = random.Random(23)
        for _ in range(60):
            word = tuple(sorted(rng.sample(range(1, 16), rng.randint(1, 3))))
            self.assertEqual(graph.nbc_member(word), is_nbc(rs, order, word), word)

    def test_dot(self):
        rs, order = setup("A3", "paper-a3")
        graph = build_gamma(rs, order)
        dot = gamma_to_dot(graph)
        self.assertTrue(dot.startswith("digraph Gamma {"))
        self.assertEqual(dot.count("[label="), 9)
        self.assertEqual(dot.count("->"), graph.edge_count)


class CacheTests(SimpleTestCase):
    def test_round_trip(self):
        rs, order = setup("A3", "paper-a3")
        graph = build_gamma(rs, order)
        loaded = deserialize_gamma(serialize_gamma(graph))
        self.assertEqual(loaded.node_count, 9)
        self.assertEqual(loaded, graph)
        for word in ((2,), (2, 4), (2, 4, 5), (1, 4, 6)):
            self.assertEqual(loaded.nbc_member(word), graph.nbc_member(word))

    def test_corrupt_header(self):
        with self.assertRaises(GammaCacheError):
            deserialize_gamma(b"\x00garbage that is not a map")

    def test_checksum_failure(self):
        import msgpack

        rs, order = setup("A2")
        body = msgpack.unpackb(serialize_gamma(build_gamma(rs, order)), raw=False)
        body["labels"][1] = 3
        with self.assertRaises(GammaCacheError):
            deserialize_gamma(msgpack.packb(body, use_bin_type=True))

    def test_version_mismatch(self):
        import msgpack

        rs, order = setup("A2")
        body = msgpack.unpackb(serialize_gamma(build_gamma(rs, order)), raw=False)
        body["version"] = 99
        with self.assertRaises(GammaCacheError):
            deserialize_gamma(msgpack.packb(body, use_bin_type=True))

    def test_load_or_build_writes_then_reads(self):
        rs, order = setup("B2")
        with tempfile.TemporaryDirectory() as tmp:
            path = cache_path(rs, order, tmp)
            self.assertFalse(path.exists())
            built = load_or_build_gamma(rs, order, tmp)
            self.assertTrue(path.exists())
            self.assertEqual(read_gamma(path), built)
            self.assertEqual(load_or_build_gamma(rs, order, tmp), built)

    def test_corrupt_cache_is_rebuilt(self):
        rs, order = setup("B2")
        with tempfile.TemporaryDirectory() as tmp:
            path = cache_path(rs, order, tmp)
            Path(tmp).mkdir(exist_ok=True)
            path.write_bytes(b"broken")
            graph = load_or_build_gamma(rs, order, tmp)
            self.assertEqual(graph.path_count(), 8)
            self.assertEqual(read_gamma(path), graph)

    def test_key_depends_on_order(self):
        rs = build_root_system(parse_type("B3"))
        a = cache_path(rs, resolve_order(rs, "default"), "/tmp/x")
        b = cache_path(rs, resolve_order(rs, "simples-last"), "/tmp/x")
        self.assertNotEqual(a, b)
