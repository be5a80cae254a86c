from django.core.management.base import BaseCommand

from families.closed_forms import FamilyId, family_poly, crossing_count
from knot_algebra.exceptions import KnotAlgebraError
from knotgraph.matrix import conway_number_from_poly
from cli.utils import add_format_argument, parse_int_list_option, render, usage_error


class Command(BaseCommand):
    help = 'Print the closed-form polynomial of a ribbon family member'

    def add_arguments(self, parser):
        parser.add_argument('action', choices=['poly'])
        parser.add_argument('--name', required=True, help='Family name, e.g. TwoRibbon or CyclicTorus')
        parser.add_argument('--params', required=True, help='Ribbon crossing counts, e.g. 2,2,1')
        add_format_argument(parser)

    def handle(self, *args, **options):
        params = parse_int_list_option(options['params'], 'params')
        try:
            family = FamilyId(options['name'], tuple(params))
            poly = family_poly(family)
            crossings = crossing_count(family)
            conway = conway_number_from_poly(poly, crossings)
        except KnotAlgebraError as e:
            raise usage_error(e)

        record = {
            'family': family.name.value,
            'params': list(family.params),
            'polynomial': str(poly),
            'conway': conway,
            'crossings': crossings,
        }
        self.stdout.write(render([record], options['format'], lambda r: r['polynomial']))
