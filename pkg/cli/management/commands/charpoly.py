from django.core.management.base import BaseCommand

from knotgraph.matrix import char_poly
from cli.utils import add_input_arguments, add_format_argument, resolve_options, render


class Command(BaseCommand):
    help = 'Print the characteristic polynomial det(xI - M) of a diagram'

    def add_arguments(self, parser):
        add_input_arguments(parser)
        add_format_argument(parser)

    def handle(self, *args, **options):
        resolved = resolve_options(options)
        poly = char_poly(resolved.matrix)
        record = {
            'polynomial': str(poly),
            'coefficients': list(poly.coefficients),
            'crossings': resolved.crossings,
            'gauss': str(resolved.code),
            'pd': resolved.pd(),
        }
        self.stdout.write(render([record], options['format'], lambda r: r['polynomial']))
