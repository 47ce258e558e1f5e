import json
import logging
import pathlib
import sys

import click

from current_chars.common import write_document
from current_chars.config import configure, load_limits
from current_chars.exceptions import CurrentCharsException, LimitExceeded
from current_chars.verification import VerificationRunner


logger = logging.getLogger(__name__)


@click.command()
@click.argument(
    'config_path',
    type=click.Path(exists=True)
)
@click.option(
    '--limits',
    type=click.Path(exists=True),
    help =  'Limits config overriding the default oracle budgets.'
)
@click.option(
    '--resultsdir',
    help =  'Directory path to store verification reports.'
)
def main(config_path, limits, resultsdir):
    """
    Script designed to verify the character formulas against the explicit
    model of M_loc for every instance listed in the checks config.
    Configs can be found in `./configs` folder.
    """

    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)-15s [%(levelname)s] %(message)s',
    )

    logger.info('Loading checks config')

    with open(config_path, "r") as read_file:
        config = json.load(read_file)

    try:
        configure(load_limits(pathlib.Path(limits) if limits else None))
    except CurrentCharsException as error:
        logger.error(f'Failed to load limits. Reason: {error}')
        sys.exit(2)

    failed = 0
    over_budget = 0

    for key, instance in config['instances'].items():
        logger.info(f'Verifying instance {key}: {instance}')
        try:
            runner = VerificationRunner.from_config(instance)
            runner.run()
            report = runner.collect_results()
        except LimitExceeded as error:
            logger.error(f'Instance {key} exceeds the oracle budget. Reason: {error}')
            over_budget += 1
            continue
        except CurrentCharsException as error:
            logger.error(f'Failed to verify instance {key}. Reason: {error}', exc_info=True)
            failed += 1
            continue

        if not report.passed:
            failed += 1

        if resultsdir is not None:
            filepath = write_document(pathlib.Path(resultsdir) / f'{key}.json', report.to_json())
            logger.info(f'Report saved: {filepath}')

    total = len(config['instances'])
    logger.info(f'{total - failed - over_budget} of {total} instances passed')

    if failed:
        sys.exit(1)
    if over_budget:
        sys.exit(3)


if __name__ == '__main__':
    main()
