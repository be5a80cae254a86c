import json

from django.core.management.base import BaseCommand

from conway.catalog import catalog, catalog_json
from knot_algebra.exceptions import KnotAlgebraError
from cli.utils import add_format_argument, render, usage_error


class Command(BaseCommand):
    help = 'Dump the Conway functions of every family with the given number of ribbons'

    def add_arguments(self, parser):
        parser.add_argument('--ribbons', type=int, required=True, help='Number of ribbons, 1 to 5')
        parser.add_argument('--json', action='store_true', help='Shorthand for --format json')
        add_format_argument(parser)

    def handle(self, *args, **options):
        n = options['ribbons']
        try:
            entries = catalog(n)
        except KnotAlgebraError as e:
            raise usage_error(e)

        if options['json'] or options['format'] == 'json':
            self.stdout.write(json.dumps(catalog_json(n), indent=2))
            return

        records = [
            {
                'entry': number,
                'function': str(entry.function),
                'term_count': entry.term_count(),
                'representative': entry.representative,
                'rational': entry.rational,
            }
            for number, entry in enumerate(entries, start=1)
        ]
        self.stdout.write(render(
            records, options['format'],
            lambda r: f"{r['entry']}. {r['function']}  ({r['term_count']} terms, {r['representative']})",
            many=True,
        ))
