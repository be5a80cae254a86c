from django.core.management.base import BaseCommand

from knotgraph.matrix import components
from cli.utils import add_format_argument, add_input_arguments, render, resolve_options


def format_cycle(cycle):
    return " ".join(f"({row},{col},{copy})" for row, col, copy in cycle)


class Command(BaseCommand):
    help = 'Print the number of link components of a diagram'

    def add_arguments(self, parser):
        add_input_arguments(parser)
        add_format_argument(parser)
        parser.add_argument('--verbose-cycles', action='store_true', help='Also print each (row, col, copy) walk')

    def handle(self, *args, **options):
        resolved = resolve_options(options)
        cycles = components(resolved.matrix)
        record = {
            'count': len(cycles) + resolved.loops,
            'cycles': [[list(edge) for edge in cycle] for cycle in cycles],
        }

        if options['format'] != 'plain':
            self.stdout.write(render([record], options['format'], str))
            return
        if options['verbose_cycles']:
            for cycle in cycles:
                self.stdout.write(format_cycle(cycle))
        self.stdout.write(str(record['count']))
