import re

from django.core.exceptions import ValidationError
from django.core.management.base import CommandError

from cli.base import ConfigCommand
from cli.forms import FORMAT_JSON
from config.validators import word_validator
from osalgebra.algebra import OSAlgebra, element_to_json, element_to_text, to_nbc


class Command(ConfigCommand):
    help = "Rewrite the monomial of an increasing word into the broken-circuit basis"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("word", nargs="*", help="Increasing order positions, e.g. 1 2 6")

    def run(self, config, options):
        text = " ".join(options["word"]).strip()
        word = ()
        if text:
            try:
                word_validator(text)
            except ValidationError as exc:
                raise CommandError(exc.messages[0])
            word = tuple(int(x) for x in re.split(r"[ ,]+", text))

        algebra = OSAlgebra(config["root_system"], config["reflection_order"])
        if any(not 1 <= p <= algebra.n for p in word):
            raise CommandError(f"positions must lie in 1..{algebra.n}")
        x = to_nbc(algebra, word)

        if config["format"] == FORMAT_JSON:
            self.stdout.write(element_to_json(x))
        else:
            self.stdout.write(element_to_text(x, ", "))
