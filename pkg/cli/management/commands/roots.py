import json

from cli.base import ConfigCommand
from cli.forms import FORMAT_JSON
from scalars.field import format_scalar


def _coordinates(rs, index):
    vec = rs.roots[index]
    return None if vec is None else [format_scalar(x) for x in vec]


class Command(ConfigCommand):
    help = "List the roots of a Coxeter type with their indices and exact coordinates"

    def run(self, config, options):
        rs = config["root_system"]
        rows = [
            {"index": i, "reflection": rs.reflection_of(i), "positive": rs.is_positive(i), "coords": _coordinates(rs, i)}
            for i in range(1, rs.size + 1)
        ]
        if config["format"] == FORMAT_JSON:
            payload = {"type": config["type"], "N": rs.num_positive, "size": rs.size, "roots": rows}
            self.stdout.write(json.dumps(payload, indent=2))
            return

        self.stdout.write(f"type: {config['type']}")
        self.stdout.write(f"N: {rs.num_positive}")
        self.stdout.write(f"2N: {rs.size}")
        for row in rows:
            sign = "+" if row["positive"] else "-"
            if row["coords"] is None:
                shown = "dihedral"
            else:
                shown = "(" + ", ".join(row["coords"]) + ")"
            self.stdout.write(f"{row['index']} {sign} r{row['reflection']}: {shown}")
