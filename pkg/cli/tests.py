import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from .forms import ConfigForm


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


class ConfigFormTests(SimpleTestCase):
    def test_valid(self):
        form = ConfigForm(data={"type": " B2xA1 ", "order": "simples-last"})
        self.assertTrue(form.is_valid(), form.errors)
        self.assertEqual(form.cleaned_data["type"], "B2xA1")
        self.assertEqual(form.cleaned_data["root_system"].num_positive, 5)
        self.assertEqual(form.cleaned_data["reflection_order"].name, "simples-last")
        self.assertIsNone(form.cleaned_data["cache_dir"])

    def test_bad_type(self):
        form = ConfigForm(data={"type": "Z9"})
        self.assertFalse(form.is_valid())
        self.assertIn("type", form.errors)

    def test_bad_order(self):
        form = ConfigForm(data={"type": "A2", "order": "1,2"})
        self.assertFalse(form.is_valid())
        self.assertIn("order", form.errors)

    def test_guard(self):
        with self.settings(GROUP_SIZE_GUARD=10):
            form = ConfigForm(data={"type": "A3"})
            self.assertFalse(form.is_valid())
            self.assertIn("allow_large", form.errors)
            self.assertTrue(ConfigForm(data={"type": "A3", "allow_large": True}).is_valid())


class RootsCommandTests(SimpleTestCase):
    def test_text(self):
        out = run("roots", "A2")
        self.assertIn("N: 3", out)
        self.assertIn("2N: 6", out)
        self.assertIn("1 + r1: (1, 0)", out)
        self.assertIn("4 - r1: (-1, 0)", out)

    def test_json_with_golden_ratio(self):
        data = json.loads(run("roots", "H3", "--json"))
        self.assertEqual(data["N"], 15)
        self.assertEqual(len(data["roots"]), 30)
        self.assertTrue(any("sqrt5" in c for row in data["roots"] for c in row["coords"]))

    def test_dihedral_has_no_coordinates(self):
        self.assertIn("dihedral", run("roots", "I2(5)"))

    def test_unknown_type(self):
        with self.assertRaises(CommandError):
            run("roots", "Z9")

    def test_guard(self):
        with self.settings(GROUP_SIZE_GUARD=10):
            with self.assertRaises(CommandError):
                run("roots", "A3")
            self.assertIn("N: 6", run("roots", "A3", "--allow-large"))


class GammaCommandTests(SimpleTestCase):
    def test_stats(self):
        out = run("gamma", "A3", "--order", "paper-a3", "--stats")
        self.assertIn("nodes=9", out)
        self.assertIn("paths=24", out)

    def test_stats_json(self):
        data = json.loads(run("gamma", "B3", "--stats", "--json"))
        self.assertEqual(data["paths"], 48)

    def test_dot(self):
        self.assertTrue(run("gamma", "A2", "--dot").startswith("digraph Gamma {"))

    def test_cache(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = run("gamma", "B2", "--cache", "--cache-dir", tmp)
            self.assertTrue(Path(out.strip()).exists())

    def test_bad_order(self):
        with self.assertRaises(CommandError):
            run("gamma", "B3", "--order", "paper-a3")


class RewriteCommandTests(SimpleTestCase):
    def test_a3(self):
        self.assertEqual(run("rewrite", "A3", "1", "2", "6").strip(), "146: 1, 246: -1")
        self.assertEqual(run("rewrite", "A3", "1", "2", "4").strip(), "0")
        self.assertEqual(run("rewrite", "A3", "2", "4", "6", "--order", "paper-a3").strip(), "246: 1")

    def test_dihedral_factor_first(self):
        self.assertEqual(run("rewrite", "I2(5)xA2", "1", "6", "7").strip(), "168: 1, 178: -1")

    def test_empty_word(self):
        self.assertEqual(run("rewrite", "A2").strip(), "1: 1")

    def test_json(self):
        data = json.loads(run("rewrite", "A3", "1", "2", "6", "--json"))
        self.assertEqual(data, [{"word": [1, 4, 6], "coeff": "1"}, {"word": [2, 4, 6], "coeff": "-1"}])

    def test_bad_words(self):
        for word in (["2", "1"], ["1", "7"], ["x"]):
            with self.assertRaises(CommandError):
                run("rewrite", "A3", *word)


class VerifyCommandTests(SimpleTestCase):
    def test_full(self):
        out = run("verify", "A2")
        self.assertIn("result: PASS", out)
        self.assertIn("invariant dimensions: 1, 1, 0", out)

    def test_top_scope(self):
        out = run("verify", "I2(6)", "--scope", "top")
        self.assertIn("result: PASS", out)
        self.assertIn("check top_degree: ok", out)

    def test_json(self):
        data = json.loads(run("verify", "B2", "--json"))
        self.assertTrue(data["passed"])
        self.assertEqual(len(data["basis"]), 4)

    def test_dihedral_factor_first(self):
        self.assertIn("result: PASS", run("verify", "I2(5)xA2"))

    def test_full_limit(self):
        with self.settings(FULL_VERIFY_LIMIT=10):
            with self.assertRaises(CommandError):
                run("verify", "A3")
