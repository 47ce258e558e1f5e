"""
Oracle verification of one (V, m) instance run as a sequence of tasks.
"""
import logging
import typing

import attr

from current_chars.charformula import ModuleSpec, graded_char_B_loc, weight_space_hilbert_series
from current_chars.coinvariants import coinvariant_hilbert_series, coinvariant_isotypic_series
from current_chars.config import Limits, current_limits
from current_chars.exceptions import ArgumentError, ConsistencyError, CurrentCharsException
from current_chars.laurent import LaurentPolynomial, q_factorial
from current_chars.lieweights import RootSystem, is_dominant
from current_chars.logutils import contextual_logger
from current_chars.modules import ExplicitModule, ModuleFactory, explicit_module_for
from current_chars.oracle import (
    MLocModule,
    build_M_loc,
    oracle_graded_char_B_loc,
    verify_commuting_actions,
    verify_weight_space_dimensions,
    verify_weight_space_duality,
)
from current_chars.partitions import enumerate_partitions, fake_degree


logger = logging.getLogger(__name__)


@attr.s(frozen=True, slots=True)
class TaskResult:
    name = attr.ib()
    passed = attr.ib()
    details = attr.ib(default='')

    def to_json(self) -> dict:
        return {'name': self.name, 'passed': self.passed, 'details': self.details}


@attr.s(frozen=True, slots=True)
class VerificationReport:
    """
    Attributes:
        module:
            Description of V.
        m:
            Number of tensor factors.
        tasks:
            `TaskResult` of every task in run order.
    """
    module = attr.ib()
    m = attr.ib()
    tasks = attr.ib()

    @property
    def passed(self) -> bool:
        return all(task.passed for task in self.tasks)

    def to_json(self) -> dict:
        return {
            'module': self.module,
            'm': self.m,
            'passed': self.passed,
            'tasks': [task.to_json() for task in self.tasks],
        }


class Task:

    def __init__(self, key: str, check: typing.Callable[[], str]):
        """
        One step of a verification run.

        Attributes:
            key:
                Task key, e.g. `formula-vs-oracle gamma=(2,1)`.
            check:
                Callable returning a short summary on success and raising
                `ConsistencyError` on failure.
        """
        self.key = key
        self.check = check

    def __str__(self):
        return f'task-{self.key}'


class VerificationRunner:

    def __init__(
        self,
        spec: ModuleSpec,
        m: int,
        V: typing.Optional[ExplicitModule]=None,
        limits: typing.Optional[Limits]=None
    ):
        """
        Class to verify the character formulas for one module against the
        explicit model of M_loc.

        Attributes:
            spec:
                `charformula.ModuleSpec` the formulas are evaluated on.
            m:
                Number of tensor factors.
            V:
                `modules.ExplicitModule` realising `spec`; constructed with
                `explicit_module_for` when omitted.
            limits:
                `config.Limits` for the oracle budgets.

        Raises:
            ArgumentError
        """
        self.spec = spec
        self.m = m
        self.V = V if V is not None else explicit_module_for(spec)
        self.limits = limits if limits is not None else current_limits()
        self.log = contextual_logger(logger, f'Verification[{spec}, m={m}]')

        self.module: typing.Optional[MLocModule] = None
        self.results: typing.List[TaskResult] = []
        self.is_finished = False

    @classmethod
    def from_config(cls, config: dict, limits: typing.Optional[Limits]=None):
        """
        Attributes:
            config:
                Verification config.

        Config Example:
            config = {
                "type": "A",
                "rank": 2,
                "highest_weights": [[1, 0]],    # repeats add multiplicity
                "m": 3,
                "module": {                     # Optional
                    "kind": "natural",
                    "rank": 2
                }
            }

        Without "module" the explicit construction is derived from the
        highest weights; with it `modules.ModuleFactory` builds V from the
        given kind and the remaining keys.

        Raises:
            ArgumentError
        """
        try:
            rs = RootSystem.from_label(config['type'], config['rank'])
            spec = ModuleSpec.from_weights(rs, config['highest_weights'])
            V = None
            if 'module' in config:
                module_config = dict(config['module'])
                kind = module_config.pop('kind')
                V = ModuleFactory().create_module(kind, module_config)
            return cls(spec, config['m'], V=V, limits=limits)
        except (KeyError, TypeError) as error:
            raise ArgumentError(
                f'Verification config is malformed. Exception occurred '
                f'({error.__class__.__name__}): {error}'
            )

    def _tasks(self) -> typing.List[Task]:
        tasks = [
            Task('module-relations', self._check_module_relations),
            Task('coinvariant-ring', self._check_coinvariant_ring),
            Task('commuting-actions', self._check_commuting_actions),
            Task('weight-space-dimensions', self._check_weight_space_dimensions),
            Task('weight-space-duality', self._check_weight_space_duality),
        ]
        for gamma in enumerate_partitions(self.m):
            tasks.append(Task(
                f'formula-vs-oracle gamma={gamma}',
                lambda gamma=gamma: self._check_formula(gamma),
            ))
        return tasks

    def _check_module_relations(self) -> str:
        self.V.check_relations()
        if self.V.character() != self.spec.character():
            raise ConsistencyError(f'Character of {self.V} does not match {self.spec}')
        return f'dimension {self.V.dimension}'

    def _check_coinvariant_ring(self) -> str:
        ring = self.module.ring
        ring.check_relations()
        if coinvariant_hilbert_series(ring) != q_factorial(self.m):
            raise ConsistencyError(
                f'Hilbert series of {ring} is {coinvariant_hilbert_series(ring)}, '
                f'expected {q_factorial(self.m)}'
            )
        for sigma in enumerate_partitions(self.m):
            series = coinvariant_isotypic_series(ring, sigma)
            if series != fake_degree(sigma):
                raise ConsistencyError(
                    f'Isotypic series of {sigma} in {ring} is {series}, '
                    f'fake degree is {fake_degree(sigma)}'
                )
        return f'dimensions {ring.dimensions}'

    def _check_commuting_actions(self) -> str:
        report = verify_commuting_actions(self.module)
        if not report.passed:
            raise ConsistencyError(
                f'{report.failures[0]} in {report.module} '
                f'({len(report.failures)} failures)'
            )
        return f'{report.pairs_checked} pairs on {report.basis_size} basis vectors'

    def _check_weight_space_dimensions(self) -> str:
        report = verify_weight_space_dimensions(self.module)
        if not report.passed:
            k, mu, expected, found = report.mismatches[0]
            raise ConsistencyError(
                f'dim (M_loc[{k}])_{mu} is {found}, expected {expected} '
                f'({len(report.mismatches)} mismatches)'
            )
        for mu in self.module.weights():
            if not is_dominant(mu):
                continue
            series = weight_space_hilbert_series(self.spec, self.m, mu)
            found = LaurentPolynomial({
                k: self.module.weight_dimensions(k).get(mu, 0)
                for k in range(self.module.top_degree + 1)
            })
            if series != found:
                raise ConsistencyError(
                    f'Hilbert series of (M_loc)_{mu} from the formula is {series}, '
                    f'explicit dimensions give {found}'
                )
        return f'{report.checked} weight spaces'

    def _check_weight_space_duality(self) -> str:
        report = verify_weight_space_duality(self.V, self.m, self.limits)
        if not report.passed:
            k, mu, expected, found = report.mismatches[0]
            raise ConsistencyError(
                f'S_{self.m}-characters of (M_loc[{k}])_{mu} and the dual weight '
                f'space differ: {expected} != {found}'
            )
        return f'{report.checked} weight spaces'

    def _check_formula(self, gamma) -> str:
        formula = graded_char_B_loc(gamma, self.spec, self.m)
        explicit = oracle_graded_char_B_loc(self.V, self.m, gamma, self.limits)
        differences = formula.difference(explicit)
        if differences:
            weight, (a, b) = next(iter(differences.items()))
            raise ConsistencyError(
                f'Formula and oracle differ at e(O({weight})): {a} != {b} '
                f'({len(differences)} weights differ)'
            )
        return f'{len(formula)} weights agree'

    def run(self):
        """
        Run every task. Failed tasks are logged and recorded; a budget error
        aborts the run.

        Raises:
            CurrentCharsException
            LimitExceeded
        """
        if self.is_finished:
            raise CurrentCharsException(
                'Verification has been run already. Run can not be done'
            )

        self.log.info('Building M_loc')
        self.module = build_M_loc(self.V, self.m, self.limits)

        for task in self._tasks():
            self.log.info(f'Running task: {task}')
            try:
                details = task.check()
            except (ConsistencyError, ArgumentError) as error:
                self.log.error(f'Task failed: {task}. Reason: {error}')
                self.results.append(TaskResult(task.key, False, str(error)))
                continue
            self.results.append(TaskResult(task.key, True, details))

        self.is_finished = True

    def collect_results(self) -> VerificationReport:
        """
        Raises:
            CurrentCharsException
        """
        if not self.is_finished:
            raise CurrentCharsException(
                'Verification has not been run yet. Can not collect results'
            )

        report = VerificationReport(str(self.spec), self.m, tuple(self.results))
        failed = [task.name for task in report.tasks if not task.passed]
        if failed:
            self.log.warning(f'Failed tasks: {failed}')
        else:
            self.log.info(f'All {len(report.tasks)} tasks passed')
        return report
