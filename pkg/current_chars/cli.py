"""
Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 resource budget exceeded.
"""
import logging
import pathlib
import time
import typing

import attr
import click

from current_chars import charformula, symgroup
from current_chars.common import canonical_json, write_document
from current_chars.config import configure, load_limits
from current_chars.enums import CharacterKind, OutputFormat, Status
from current_chars.exceptions import (
    ArgumentError,
    CurrentCharsException,
    LimitExceeded,
)
from current_chars.lieweights import RootSystem, dominant_representative, weyl_orbit
from current_chars.partitions import Partition, enumerate_partitions, fake_degree
from current_chars.verification import VerificationRunner


logger = logging.getLogger(__name__)


EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class PartitionType(click.ParamType):
    name = 'partition'

    def convert(self, value, param, ctx):
        if isinstance(value, Partition):
            return value
        try:
            return Partition.from_string(value)
        except ArgumentError as error:
            self.fail(str(error), param, ctx)


class IntegersType(click.ParamType):
    """ Comma-separated integers: weights in fundamental coordinates, contents. """
    name = 'integers'

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return tuple(int(piece) for piece in value.split(','))
        except ValueError:
            self.fail(
                f'Malformed list of integers: {value!r}. Expected e.g. "1,0"',
                param,
                ctx,
            )


PARTITION = PartitionType()
INTEGERS = IntegersType()


@attr.s(frozen=True, slots=True)
class CliOptions:
    output_format = attr.ib()
    timing = attr.ib()


@attr.s(frozen=True, slots=True)
class CommandResult:
    """
    Attributes:
        status:
            `enums.Status`.
        command:
            Command name.
        payload:
            Command-specific JSON document.
        timing_ms:
            Wall time of the computation in milliseconds.
    """
    status = attr.ib()
    command = attr.ib()
    payload = attr.ib()
    timing_ms = attr.ib(default=None)

    def to_json(self, with_timing: bool=False) -> dict:
        document = {
            'status': self.status.value,
            'command': self.command,
            'payload': self.payload,
        }
        if with_timing:
            document['timing_ms'] = self.timing_ms
        return document


def _exit_code(error: CurrentCharsException) -> int:
    if isinstance(error, ArgumentError):
        return EXIT_USAGE
    if isinstance(error, LimitExceeded):
        return EXIT_BUDGET
    return EXIT_VERIFICATION_FAILED


def _execute(
    ctx: click.Context,
    command: str,
    compute: typing.Callable[[], typing.Tuple[dict, str, bool]],
    output: typing.Optional[str]=None
):
    """
    Run `compute`, which returns (payload, text, passed), and print the
    result in the requested format. Library errors become exit codes.
    """
    options: CliOptions = ctx.obj
    start = time.perf_counter()

    try:
        payload, text, passed = compute()
    except CurrentCharsException as error:
        code = _exit_code(error)
        logger.error(f'Command {command} failed. Reason: {error}')
        result = CommandResult(
            Status.error,
            command,
            {'error': str(error), 'exit_code': code},
            round((time.perf_counter() - start) * 1000, 3),
        )
        if options.output_format == OutputFormat.json:
            click.echo(canonical_json(result.to_json(options.timing)), nl=False)
        else:
            click.echo(f'Error: {error}', err=True)
        ctx.exit(code)

    result = CommandResult(
        Status.ok if passed else Status.error,
        command,
        payload,
        round((time.perf_counter() - start) * 1000, 3),
    )
    document = result.to_json(options.timing)

    if output is not None:
        write_document(pathlib.Path(output), document)
        logger.info(f'Document written: {output}')

    if options.output_format == OutputFormat.json:
        click.echo(canonical_json(document), nl=False)
    else:
        if options.timing:
            text += f'\n[{result.timing_ms} ms]'
        click.echo(text)

    if not passed:
        ctx.exit(EXIT_VERIFICATION_FAILED)


def _module_spec(type_label: str, rank: int, hw) -> charformula.ModuleSpec:
    rs = RootSystem.from_label(type_label, rank)
    return charformula.ModuleSpec.from_weights(rs, hw)


def _module_options(func):
    """ --type, --rank and --hw shared by the commands taking a module V. """
    func = click.option(
        '--hw',
        type=INTEGERS,
        multiple=True,
        required=True,
        help='Highest weight of a summand of V, e.g. "1,0". Repeat for direct sums.'
    )(func)
    func = click.option(
        '--rank',
        type=click.IntRange(min=1),
        required=True,
        help='Rank of the Lie algebra.'
    )(func)
    func = click.option(
        '--type', 'type_label',
        type=click.Choice(['A', 'B', 'C', 'D', 'E', 'F', 'G'], case_sensitive=False),
        required=True,
        help='Root system type.'
    )(func)
    return func


OUTPUT_OPTION = click.option(
    '--output',
    type=click.Path(dir_okay=False),
    help='Also write the JSON document to this file.'
)


@click.group()
@click.option(
    '--format', 'output_format',
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.text.value,
    help='Output format.'
)
@click.option(
    '--config', 'config_path',
    type=click.Path(exists=True, dir_okay=False),
    help='Limits config, see `./configs/limits.json`.'
)
@click.option('--verbose', is_flag=True, help='Debug logging on stderr.')
@click.option('--timing', is_flag=True, help='Report computation time.')
@click.pass_context
def main(ctx, output_format, config_path, verbose, timing):
    """
    Graded characters of multiplicity spaces of tensor powers of current
    algebra modules, with brute-force verification.
    """
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(asctime)-15s [%(levelname)s] %(message)s',
    )

    try:
        configure(load_limits(pathlib.Path(config_path) if config_path else None))
    except ArgumentError as error:
        raise click.BadParameter(str(error), param_hint='--config')

    ctx.obj = CliOptions(OutputFormat(output_format), timing)


@main.command('fake-degree')
@click.option('--m', 'm', type=click.IntRange(min=1), required=True, help='Degree of S_m.')
@click.option('--sigma', type=PARTITION, help='A single partition, e.g. "2,1".')
@OUTPUT_OPTION
@click.pass_context
def fake_degree_command(ctx, m, sigma, output):
    """ Fake degrees f_sigma(u) for one or all partitions of m. """
    def compute():
        if sigma is not None and sigma.size != m:
            raise ArgumentError(f'Partition {sigma} does not partition m={m}')
        sigmas = [sigma] if sigma is not None else enumerate_partitions(m)
        rows = [(s, fake_degree(s)) for s in sigmas]
        payload = {
            'm': m,
            'fake_degrees': [{'sigma': s.to_json(), 'poly': f.to_json()} for s, f in rows],
        }
        return payload, '\n'.join(f'{s}: {f}' for s, f in rows), True

    _execute(ctx, 'fake-degree', compute, output)


@main.command('bchar')
@_module_options
@click.option('--m', 'm', type=click.IntRange(min=1), required=True, help='Number of tensor factors.')
@click.option('--gamma', type=PARTITION, required=True, help='Partition of m, e.g. "2,1".')
@click.option('--local/--global', 'local', default=True, help='B_loc (exact) or B (truncated).')
@click.option('--max-degree', type=int, help='Truncation degree, required with --global.')
@OUTPUT_OPTION
@click.pass_context
def bchar_command(ctx, type_label, rank, hw, m, gamma, local, max_degree, output):
    """ Graded character of B_loc(gamma, V) or B(gamma, V). """
    kind = CharacterKind.local if local else CharacterKind.global_

    def compute():
        spec = _module_spec(type_label, rank, hw)
        if kind == CharacterKind.local:
            chi = charformula.graded_char_B_loc(gamma, spec, m)
        elif max_degree is None:
            raise ArgumentError('--global needs an explicit truncation degree: --max-degree')
        else:
            chi = charformula.graded_char_B(gamma, spec, m, max_degree)
        payload = chi.to_json()
        payload['kind'] = kind.value
        return payload, str(chi), True

    _execute(ctx, 'bchar', compute, output)


@main.command('duality-check')
@_module_options
@click.option('--m', 'm', type=click.IntRange(min=1), required=True, help='Number of tensor factors.')
@click.option('--gamma', type=PARTITION, required=True, help='Partition of m, e.g. "2,1".')
@OUTPUT_OPTION
@click.pass_context
def duality_check_command(ctx, type_label, rank, hw, m, gamma, output):
    """ chi B_loc(gamma, V) against u^{m(m-1)/2} dual(chi B_loc(gamma^v, V^*)). """
    def compute():
        report = charformula.check_duality(gamma, _module_spec(type_label, rank, hw), m)
        text = '\n'.join([
            f'{"PASS" if report.passed else "FAIL"}: gamma={report.gamma}, '
            f'conjugate={report.conjugate}, shift u^{report.shift}',
            f'lhs:\n{report.lhs}',
            f'rhs:\n{report.rhs}',
        ])
        return report.to_json(), text, report.passed

    _execute(ctx, 'duality-check', compute, output)


@main.command('oracle-verify')
@_module_options
@click.option('--m', 'm', type=click.IntRange(min=1), required=True, help='Number of tensor factors.')
@OUTPUT_OPTION
@click.pass_context
def oracle_verify_command(ctx, type_label, rank, hw, m, output):
    """ Check every formula for V and m against the explicit model of M_loc. """
    def compute():
        runner = VerificationRunner(_module_spec(type_label, rank, hw), m)
        runner.run()
        report = runner.collect_results()
        lines = [f'{"PASS" if report.passed else "FAIL"}: {report.module}, m={report.m}']
        lines += [
            f'  [{"ok" if task.passed else "FAILED"}] {task.name}: {task.details}'
            for task in report.tasks
        ]
        return report.to_json(), '\n'.join(lines), report.passed

    _execute(ctx, 'oracle-verify', compute, output)


@main.command('kronecker')
@click.option('--tau', type=PARTITION, required=True)
@click.option('--sigma', type=PARTITION, required=True)
@click.option('--gamma', type=PARTITION, required=True)
@click.pass_context
def kronecker_command(ctx, tau, sigma, gamma):
    """ Multiplicity of S(gamma) in S(tau) (x) S(sigma). """
    def compute():
        c = symgroup.kronecker(tau, sigma, gamma)
        payload = {
            'tau': tau.to_json(),
            'sigma': sigma.to_json(),
            'gamma': gamma.to_json(),
            'coefficient': c,
        }
        return payload, str(c), True

    _execute(ctx, 'kronecker', compute)


@main.command('kostka')
@click.option('--shape', type=PARTITION, required=True)
@click.option('--content', type=INTEGERS, required=True, help='Composition, e.g. "1,2,0".')
@click.pass_context
def kostka_command(ctx, shape, content):
    """ Number of semistandard tableaux of a shape and content. """
    def compute():
        k = symgroup.kostka(shape, content)
        payload = {'shape': shape.to_json(), 'content': list(content), 'kostka': k}
        return payload, str(k), True

    _execute(ctx, 'kostka', compute)


@main.command('char-table')
@click.option('--m', 'm', type=click.IntRange(min=1), required=True, help='Degree of S_m.')
@OUTPUT_OPTION
@click.pass_context
def char_table_command(ctx, m, output):
    """ Character table of S_m; rows are irreducibles, columns cycle types. """
    def compute():
        table = symgroup.character_table(m)
        payload = {
            'm': m,
            'labels': [p.to_json() for p in table.labels],
            'class_sizes': list(table.class_sizes),
            'values': [list(row) for row in table.values],
        }
        width = max(len(str(p)) for p in table.labels) + 1
        lines = [' ' * width + ' '.join(str(p).rjust(width) for p in table.labels)]
        for label, row in zip(table.labels, table.values):
            lines.append(str(label).ljust(width) + ' '.join(str(v).rjust(width) for v in row))
        return payload, '\n'.join(lines), True

    _execute(ctx, 'char-table', compute, output)


@main.command('orbit')
@click.option(
    '--type', 'type_label',
    type=click.Choice(['A', 'B', 'C', 'D', 'E', 'F', 'G'], case_sensitive=False),
    required=True
)
@click.option('--rank', type=click.IntRange(min=1), required=True)
@click.option('--weight', type=INTEGERS, required=True, help='Fundamental coordinates, e.g. "1,-1".')
@click.pass_context
def orbit_command(ctx, type_label, rank, weight):
    """ Weyl orbit and dominant representative of a weight. """
    def compute():
        rs = RootSystem.from_label(type_label, rank)
        dominant = dominant_representative(rs, weight)
        orbit = sorted(weyl_orbit(rs, dominant))
        payload = {
            'type': rs.type_label,
            'rank': rs.rank,
            'weight': list(weight),
            'dominant': list(dominant),
            'orbit': [list(w) for w in orbit],
            'size': len(orbit),
        }
        text = '\n'.join(
            [f'dominant: {dominant}', f'orbit size: {len(orbit)}']
            + [str(w) for w in orbit]
        )
        return payload, text, True

    _execute(ctx, 'orbit', compute)


@main.command('natural-char')
@click.option('--rank', type=click.IntRange(min=1), required=True, help='n for sl_{n+1}.')
@click.option('--m', 'm', type=click.IntRange(min=1), required=True, help='Number of tensor factors.')
@click.option('--gamma', type=PARTITION, required=True, help='Partition of m, e.g. "2,1".')
@OUTPUT_OPTION
@click.pass_context
def natural_char_command(ctx, rank, m, gamma, output):
    """ B_loc(gamma, V(w_1)) of sl_{n+1} through Kostka numbers. """
    def compute():
        chi = charformula.graded_char_natural(gamma, rank, m)
        return chi.to_json(), str(chi), True

    _execute(ctx, 'natural-char', compute, output)


if __name__ == '__main__':
    main()
