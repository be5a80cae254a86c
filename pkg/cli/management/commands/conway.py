from django.core.management.base import BaseCommand

from conway.invariants import conway_from_resolved
from knot_algebra.exceptions import KnotAlgebraError
from cli.utils import add_input_arguments, add_format_argument, resolve_options, render, usage_error


class Command(BaseCommand):
    help = "Print the Conway number P'(2)/V of a diagram and its crossing count"

    def add_arguments(self, parser):
        add_input_arguments(parser)
        add_format_argument(parser)

    def handle(self, *args, **options):
        resolved = resolve_options(options)
        try:
            value = conway_from_resolved(resolved)
        except KnotAlgebraError as e:
            raise usage_error(e)
        record = {'conway': value, 'crossings': resolved.crossings}
        self.stdout.write(render(
            [record], options['format'], lambda r: f"conway={r['conway']} crossings={r['crossings']}"
        ))
