from django.core.management.base import BaseCommand

from conway.functions import gauss_bracket_numerator, gauss_bracket_denominator
from cli.utils import parse_int_list_option


class Command(BaseCommand):
    help = 'Print the Gauss bracket numerator/denominator of a ribbon vector'

    def add_arguments(self, parser):
        parser.add_argument('--a', required=True, help='Ribbon crossing counts, e.g. 2,1,2')

    def handle(self, *args, **options):
        a = parse_int_list_option(options['a'], 'a')
        self.stdout.write(f'{gauss_bracket_numerator(a)}/{gauss_bracket_denominator(a)}')
