import json

from cli.base import ConfigCommand
from cli.forms import FORMAT_DOT, FORMAT_JSON
from matroid.cache import cache_path, cached_gamma, load_or_build_gamma
from matroid.gamma import gamma_to_dot


class Command(ConfigCommand):
    help = "Build the broken-circuit basis graph of a Coxeter type: statistics, DOT, or a cache file"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--stats", action="store_true", help="Print node, edge and path counts")
        parser.add_argument("--dot", action="store_true", help="Print the graph in DOT")
        parser.add_argument("--cache", action="store_true", help="Write the serialized graph to the cache directory")

    def run(self, config, options):
        rs = config["root_system"]
        order = config["reflection_order"]
        if options["cache"]:
            graph = load_or_build_gamma(rs, order, config["cache_dir"], config["allow_large"])
            self.stdout.write(str(cache_path(rs, order, config["cache_dir"])))
        else:
            graph = cached_gamma(rs, order, config["cache_dir"], config["allow_large"])

        if options["dot"] or config["format"] == FORMAT_DOT:
            self.stdout.write(gamma_to_dot(graph), ending="")
            return
        if options["stats"] or not options["cache"]:
            stats = {
                "type": graph.type_name,
                "order": order.name,
                "nodes": graph.node_count,
                "edges": graph.edge_count,
                "paths": graph.path_count(),
            }
            if config["format"] == FORMAT_JSON:
                self.stdout.write(json.dumps(stats))
            else:
                self.stdout.write(" ".join(f"{k}={v}" for k, v in stats.items()))
