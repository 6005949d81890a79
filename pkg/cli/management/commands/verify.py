from django.core.management.base import CommandError

from cli.base import ConfigCommand
from cli.forms import FORMAT_JSON
from fvverify.reports import SCOPE_FULL, SCOPE_TOP, report_to_json, report_to_text, verify
from matroid.orders import SIMPLES_LAST


class Command(ConfigCommand):
    help = "Verify the invariant basis of a Coxeter type; exits non-zero when any check fails"
    default_order = SIMPLES_LAST

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--scope", choices=[SCOPE_TOP, SCOPE_FULL], default=SCOPE_FULL)

    def run(self, config, options):
        report = verify(
            config["type"],
            scope=options["scope"],
            order_selector=config["order"],
            threads=config["threads"],
            allow_large=config["allow_large"],
        )
        if config["format"] == FORMAT_JSON:
            self.stdout.write(report_to_json(report))
        else:
            self.stdout.write(report_to_text(report))
        if not report.passed:
            raise CommandError(f"verification of {report.type} failed")
