from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from cli.suites import SUITES, run_suite
from cli.utils import VERIFICATION_FAILED


class Command(BaseCommand):
    help = 'Run the exact-equality verification sweeps'

    def add_arguments(self, parser):
        parser.add_argument('--suite', choices=sorted(SUITES), default='all', help='Which sweep to run')
        parser.add_argument(
            '--workers',
            type=int,
            default=None,
            help='Worker processes (defaults to KNOT_VERIFY_WORKERS)',
        )

    def handle(self, *args, **options):
        workers = options['workers'] or settings.KNOT_VERIFY_WORKERS
        results = run_suite(options['suite'], workers=workers)

        failed = 0
        for check, mismatches in results.items():
            if mismatches:
                failed += len(mismatches)
                self.stdout.write(self.style.ERROR(f'FAIL {check}'))
                for mismatch in mismatches:
                    self.stdout.write(f'  {mismatch}')
            else:
                self.stdout.write(f'ok   {check}')

        if failed:
            raise CommandError(f'{failed} mismatch(es) in suite {options["suite"]}', returncode=VERIFICATION_FAILED)
        self.stdout.write(self.style.SUCCESS(f'Suite {options["suite"]} passed ({len(results)} checks)'))
