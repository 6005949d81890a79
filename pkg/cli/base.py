"""
Shared plumbing of the management commands: common options, config
validation through ConfigForm, and translation of domain errors.
"""
import logging

from django.core.management.base import BaseCommand, CommandError

from coxeter.exceptions import ConsistencyError, CoxeterTypeError, GroupTooLargeError
from fvverify.exceptions import VerificationError
from matroid.exceptions import GammaCacheError
from matroid.orders import DEFAULT

from .forms import FORMAT_JSON, ConfigForm

logger = logging.getLogger(__name__)

DOMAIN_ERRORS = (
    CoxeterTypeError,
    GroupTooLargeError,
    ConsistencyError,
    GammaCacheError,
    VerificationError,
    ValueError,
    IndexError,
)


class ConfigCommand(BaseCommand):
    default_order = DEFAULT

    def add_arguments(self, parser):
        parser.add_argument("type", help="Coxeter type, e.g. A3, H3, B2xA1, I2(7)")
        parser.add_argument(
            "--order",
            default=self.default_order,
            help="Reflection order: default, simples-last, paper-a3 or a comma separated permutation of 1..N",
        )
        parser.add_argument("--cache-dir", dest="cache_dir", default=None, help="Directory for basis graph caches")
        parser.add_argument("--allow-large", dest="allow_large", action="store_true", help="Lift the group size guard")
        parser.add_argument("--format", dest="format", choices=["text", "json", "dot"], default="text")
        parser.add_argument("--json", dest="as_json", action="store_true", help="Same as --format json")
        parser.add_argument(
            "--threads",
            type=int,
            default=None,
            help="Upper bound on averaging worker threads; the result is the same for any count",
        )

    def load_config(self, options) -> dict:
        form = ConfigForm(
            data={
                "type": options["type"],
                "order": options.get("order") or self.default_order,
                "cache_dir": options.get("cache_dir") or "",
                "allow_large": options.get("allow_large", False),
                "format": FORMAT_JSON if options.get("as_json") else options.get("format") or "text",
                "threads": options.get("threads"),
            }
        )
        if not form.is_valid():
            raise CommandError(form.error_text())
        return form.cleaned_data

    def handle(self, *args, **options):
        config = self.load_config(options)
        try:
            return self.run(config, options)
        except DOMAIN_ERRORS as exc:
            logger.error("[CLI] command=%s type=%s error=%s", self.__module__.rsplit(".", 1)[-1], config["type"], exc)
            raise CommandError(str(exc)) from exc

    def run(self, config: dict, options: dict):
        raise NotImplementedError
