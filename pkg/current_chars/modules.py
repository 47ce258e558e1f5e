"""
Explicit finite-dimensional modules given by matrices of the Chevalley
generators x_i^+ and x_i^- on a weight basis.
"""
import fractions
import logging
import typing

from current_chars.exceptions import ArgumentError, ConsistencyError
from current_chars.linalg import SparseMatrix, apply, compose, sparse_vector, subtract, transpose
from current_chars.lieweights import RootSystem, Weight, WeightMultiset


logger = logging.getLogger(__name__)


class ExplicitModule:

    def __init__(
        self,
        rs: RootSystem,
        basis_weights: typing.Sequence[Weight],
        raising_actions: typing.Sequence[SparseMatrix],
        lowering_actions: typing.Sequence[SparseMatrix],
        name: typing.Optional[str]=None
    ):
        """
        Module of the simple Lie algebra of `rs` on a weight basis.

        Attributes:
            rs:
                `lieweights.RootSystem` of the Lie algebra.
            basis_weights:
                basis_weights[k] is the weight of the basis vector k in
                fundamental coordinates.
            raising_actions:
                raising_actions[i] is the sparse matrix of x_i^+ (0-based i).
            lowering_actions:
                lowering_actions[i] is the sparse matrix of x_i^-.
            name:
                Label used in logs and reports.

        Raises:
            ArgumentError
        """
        self.rs = rs
        self.basis_weights = [tuple(w) for w in basis_weights]
        self.raising_actions = list(raising_actions)
        self.lowering_actions = list(lowering_actions)
        self.name = name if name is not None else f'ExplicitModule({rs}, dim={len(self.basis_weights)})'

        if len(self.raising_actions) != rs.rank or len(self.lowering_actions) != rs.rank:
            raise ArgumentError(
                f'{self.name} needs one raising and one lowering matrix per simple '
                f'root of {rs}, got: {len(self.raising_actions)} and '
                f'{len(self.lowering_actions)}'
            )
        for weight in self.basis_weights:
            if len(weight) != rs.rank:
                raise ArgumentError(f'Basis weight {weight} of {self.name} does not belong to {rs}')
        for matrix in self.raising_actions + self.lowering_actions:
            for j, column in matrix.items():
                if not 0 <= j < self.dimension or any(not 0 <= i < self.dimension for i in column):
                    raise ArgumentError(f'Matrix entry of {self.name} outside of the basis: column {j}')

    def __str__(self):
        return self.name

    @property
    def dimension(self) -> int:
        return len(self.basis_weights)

    def character(self) -> WeightMultiset:
        entries = {}
        for weight in self.basis_weights:
            entries[weight] = entries.get(weight, 0) + 1
        return WeightMultiset(entries)

    def cartan_action(self, i: int) -> SparseMatrix:
        """ h_i acts by <weight, alpha_i^v> on each basis vector. """
        return {
            k: {k: fractions.Fraction(weight[i])}
            for k, weight in enumerate(self.basis_weights) if weight[i]
        }

    def check_relations(self):
        """
        Check that x_i^+ and x_i^- shift weights by +-alpha_i and that
        [x_i^+, x_j^-] = delta_ij h_i.

        Raises:
            ConsistencyError
        """
        for i in range(self.rs.rank):
            root = self.rs.simple_root(i)
            for sign, matrices in ((1, self.raising_actions), (-1, self.lowering_actions)):
                for j, column in matrices[i].items():
                    expected = tuple(a + sign * b for a, b in zip(self.basis_weights[j], root))
                    for k in column:
                        if self.basis_weights[k] != expected:
                            raise ConsistencyError(
                                f'x_{i + 1}^{"+" if sign > 0 else "-"} of {self} maps weight '
                                f'{self.basis_weights[j]} to {self.basis_weights[k]}, '
                                f'expected {expected}'
                            )

        for i in range(self.rs.rank):
            for j in range(self.rs.rank):
                e, f = self.raising_actions[i], self.lowering_actions[j]
                commutator = subtract(compose(e, f), compose(f, e))
                expected = self.cartan_action(i) if i == j else {}
                if subtract(commutator, expected):
                    raise ConsistencyError(
                        f'[x_{i + 1}^+, x_{j + 1}^-] of {self} is not '
                        f'{"h_" + str(i + 1) if i == j else "0"}'
                    )

    def dual(self) -> 'ExplicitModule':
        """ Contragredient module: weights negated, x acting by -x^T. """
        def contragredient(matrix):
            return {j: {i: -v for i, v in column.items()} for j, column in transpose(matrix).items()}

        return ExplicitModule(
            self.rs,
            [tuple(-c for c in w) for w in self.basis_weights],
            [contragredient(x) for x in self.raising_actions],
            [contragredient(x) for x in self.lowering_actions],
            name=f'{self.name}*',
        )

    def direct_sum(self, other: 'ExplicitModule') -> 'ExplicitModule':
        if self.rs != other.rs:
            raise ArgumentError(f'Can not add modules of {self.rs} and {other.rs}')
        offset = self.dimension

        def shifted(matrix):
            return {
                j + offset: {i + offset: v for i, v in column.items()}
                for j, column in matrix.items()
            }

        return ExplicitModule(
            self.rs,
            self.basis_weights + other.basis_weights,
            [{**a, **shifted(b)} for a, b in zip(self.raising_actions, other.raising_actions)],
            [{**a, **shifted(b)} for a, b in zip(self.lowering_actions, other.lowering_actions)],
            name=f'{self.name} + {other.name}',
        )

    def apply(self, matrix: SparseMatrix, vector) -> typing.Dict[int, fractions.Fraction]:
        return apply(matrix, sparse_vector(vector))

    @classmethod
    def from_config(cls, config: dict) -> 'ExplicitModule':
        """
        Create `ExplicitModule` from config.

        Matrix entries are [source, target, value] triples, one list per
        simple root; values are integers or "p/q" strings.

        Config Example:
            config = {
                "type": "A",
                "rank": 1,
                "weights": [[1], [-1]],
                "raising": [[[1, 0, 1]]],
                "lowering": [[[0, 1, 1]]],
                "name": "V(1)"                  # Optional
            }

        Raises:
            ArgumentError
        """
        def matrix(entries):
            result = {}
            for source, target, value in entries:
                result.setdefault(int(source), {})[int(target)] = fractions.Fraction(value)
            return result

        try:
            rs = RootSystem.from_label(config['type'], config['rank'])
            return cls(
                rs,
                [tuple(int(c) for c in w) for w in config['weights']],
                [matrix(entries) for entries in config['raising']],
                [matrix(entries) for entries in config['lowering']],
                name=config.get('name'),
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as error:
            raise ArgumentError(
                f'Explicit module config is malformed. Exception occurred '
                f'({error.__class__.__name__}): {error}'
            )


def _fundamental(n: int, i: int) -> typing.List[int]:
    """ w_i as a list (1-based; w_0 = w_{n+1} = 0). """
    return [1 if k == i - 1 else 0 for k in range(n)]


def build_natural_module(n: int) -> ExplicitModule:
    """
    The natural module of sl_{n+1}: basis v_0, ..., v_n with
    v_i = x_i^- v_{i-1} and weight(v_i) = -w_i + w_{i+1}.

    Raises:
        ArgumentError
    """
    rs = RootSystem.from_label('A', n)
    weights = [
        tuple(b - a for a, b in zip(_fundamental(n, i), _fundamental(n, i + 1)))
        for i in range(n + 1)
    ]
    one = fractions.Fraction(1)
    lowering = [{i - 1: {i: one}} for i in range(1, n + 1)]
    raising = [{i: {i - 1: one}} for i in range(1, n + 1)]
    return ExplicitModule(rs, weights, raising, lowering, name=f'natural module of {rs}')


def build_sl2_module(k: int) -> ExplicitModule:
    """
    The (k+1)-dimensional module V(k) of sl_2: x^- v_j = v_{j+1},
    x^+ v_j = j (k - j + 1) v_{j-1}.

    Raises:
        ArgumentError
    """
    if not isinstance(k, int) or k < 0:
        raise ArgumentError(f'Highest weight of an sl2 module must be a non-negative integer, got: {k!r}')

    rs = RootSystem.from_label('A', 1)
    lowering = {j: {j + 1: fractions.Fraction(1)} for j in range(k)}
    raising = {j: {j - 1: fractions.Fraction(j * (k - j + 1))} for j in range(1, k + 1)}
    return ExplicitModule(
        rs,
        [(k - 2 * j,) for j in range(k + 1)],
        [raising],
        [lowering],
        name=f'V({k}) of {rs}',
    )


def build_trivial_module(rs: RootSystem) -> ExplicitModule:
    zero = tuple(0 for _ in range(rs.rank))
    return ExplicitModule(
        rs, [zero], [{} for _ in range(rs.rank)], [{} for _ in range(rs.rank)],
        name=f'trivial module of {rs}',
    )


class ModuleFactory:

    def create_module(self, kind: str, config: dict) -> ExplicitModule:
        """
        Raises:
            ArgumentError
        """
        try:
            if kind == 'natural':
                return build_natural_module(config['rank'])
            if kind == 'natural-dual':
                return build_natural_module(config['rank']).dual()
            if kind == 'sl2':
                return build_sl2_module(config['highest_weight'])
            if kind == 'explicit':
                return ExplicitModule.from_config(config)
        except KeyError as error:
            raise ArgumentError(f'Config of module kind {kind!r} misses key {error}')

        raise ArgumentError(
            f'No matching module kind found: {kind!r}. Known kinds: '
            'natural, natural-dual, sl2, explicit'
        )


def explicit_module_for(spec) -> ExplicitModule:
    """
    Explicit construction of a `charformula.ModuleSpec`: direct sums of
    trivial modules, the natural module of type A and its dual, and every
    V(k) of sl_2.

    Raises:
        ArgumentError
    """
    rs = spec.rs
    summands = []

    for weight, mult in spec.highest_weights:
        if not any(weight):
            summand = build_trivial_module(rs)
        elif rs.type_label == 'A' and rs.rank == 1:
            summand = build_sl2_module(weight[0])
        elif rs.type_label == 'A' and list(weight) == _fundamental(rs.rank, 1):
            summand = build_natural_module(rs.rank)
        elif rs.type_label == 'A' and list(weight) == _fundamental(rs.rank, rs.rank):
            summand = build_natural_module(rs.rank).dual()
        else:
            raise ArgumentError(
                f'No explicit construction of V({",".join(map(str, weight))}) of {rs}. '
                'Available: trivial modules, V(w_1) and V(w_n) of type A_n, V(k) of A_1'
            )
        summands.extend([summand] * mult)

    module = summands[0]
    for summand in summands[1:]:
        module = module.direct_sum(summand)
    logger.debug(f'Explicit module for {spec}: {module}')
    return module
