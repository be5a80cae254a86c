from django.core.management.base import BaseCommand

from knotgraph.matrix import permutation_decompositions
from cli.utils import add_format_argument, add_input_arguments, render, resolve_options


class Command(BaseCommand):
    help = 'List the unordered pairs of permutation matrices summing to the diagram matrix'

    def add_arguments(self, parser):
        add_input_arguments(parser)
        add_format_argument(parser)

    def handle(self, *args, **options):
        resolved = resolve_options(options)
        decompositions = permutation_decompositions(resolved.matrix)
        records = [
            {'index': number, 'p': list(decomposition.p), 'q': list(decomposition.q)}
            for number, decomposition in enumerate(decompositions, start=1)
        ]

        if options['format'] == 'json':
            self.stdout.write(render([{'count': len(records), 'decompositions': records}], 'json', str))
            return
        if options['format'] == 'csv':
            self.stdout.write(render(records, 'csv', str))
            return
        for record in records:
            self.stdout.write(f"{record['index']}: P={record['p']} Q={record['q']}")
        self.stdout.write(f'count={len(records)}')
