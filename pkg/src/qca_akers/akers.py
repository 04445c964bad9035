"""Bit-level model of Akers rectangular logic arrays.

Each cell of an Akers array computes F = X*~Z + Y*Z, reading X from the cell
above and Y from the cell on the left. The top boundary feeds X = 0, the left
boundary feeds Y = 1, and the circuit output is the lower-right cell. Z is a
per-cell source: a programmed constant, a circuit input variable, or a stored
bit written ahead of execution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence


class AkersError(Exception):
    pass


class UnboundVariable(AkersError):
    pass


class MissingStoredBit(AkersError):
    pass


class TooManyVariables(AkersError):
    pass


class ArityOutOfRange(AkersError):
    pass


class BothClocksActive(AkersError):
    pass


class NonComplementaryState(AkersError):
    pass


class NetlistFormatError(AkersError):
    pass


Bit = int


def _check_bit(value: int, what: str = "bit") -> int:
    if value not in (0, 1):
        raise AkersError(f"{what} must be 0 or 1, got {value!r}")
    return value


@dataclass(frozen=True)
class Const:
    value: Bit

    def __post_init__(self):
        _check_bit(self.value, "Const value")


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not self.name:
            raise AkersError("Var name must be nonempty")


@dataclass(frozen=True)
class Stored:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise AkersError("Stored index must be nonnegative")


ZSource = Const | Var | Stored


@dataclass(frozen=True)
class AkersGrid:
    rows: int
    cols: int
    z: tuple[tuple[ZSource, ...], ...]
    invert_output: bool = False

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise AkersError("grid must have positive dimensions")
        if len(self.z) != self.rows or any(len(r) != self.cols for r in self.z):
            raise AkersError("z matrix shape does not match rows x cols")

    def var_names(self) -> tuple[str, ...]:
        """Variable names in first-appearance row-major order."""
        seen: dict[str, None] = {}
        for row in self.z:
            for src in row:
                if isinstance(src, Var):
                    seen.setdefault(src.name, None)
        return tuple(seen)

    def stored_count(self) -> int:
        indices = {
            src.index for row in self.z for src in row if isinstance(src, Stored)
        }
        if not indices:
            return 0
        if indices != set(range(max(indices) + 1)):
            raise AkersError("Stored indices must be dense 0..S-1")
        return max(indices) + 1

    def cell_count(self) -> int:
        return self.rows * self.cols


def grid(rows_of_z: Sequence[Sequence[ZSource]], invert_output: bool = False) -> AkersGrid:
    z = tuple(tuple(row) for row in rows_of_z)
    return AkersGrid(rows=len(z), cols=len(z[0]) if z else 0, z=z, invert_output=invert_output)


def akers_eval(x: Bit, y: Bit, z: Bit) -> Bit:
    """Single-cell function: z selects y, ~z selects x."""
    return (x & (1 - z)) | (y & z)


@dataclass(frozen=True)
class PrimitiveCellState:
    """Stored state of one array cell: two complementary flip-flops.

    qz is the stored control bit; qz_bar mirrors it inverted. The clock flags
    record which flip-flop's clock was driven during the write.
    """

    qz: Bit
    qz_bar: Bit
    clock_qz_active: bool
    clock_qzbar_active: bool


def write_primitive(bit: Bit) -> PrimitiveCellState:
    """Write a bit into a primitive cell.

    Writing 1 drives the qz-side clock and idles the complementary side;
    writing 0 does the opposite.
    """
    _check_bit(bit)
    return PrimitiveCellState(
        qz=bit,
        qz_bar=1 - bit,
        clock_qz_active=bool(bit),
        clock_qzbar_active=not bit,
    )


def validate_primitive(state: PrimitiveCellState) -> None:
    if state.clock_qz_active and state.clock_qzbar_active:
        raise BothClocksActive("both flip-flop clocks active in one cell")
    if state.qz_bar != 1 - state.qz:
        raise NonComplementaryState(
            f"qz_bar={state.qz_bar} is not the complement of qz={state.qz}"
        )


def switch_eval(x: Bit, y: Bit, state: PrimitiveCellState) -> Bit:
    """Evaluate one cell through its flip-flop switches.

    The qz_bar-side switch conducts x when qz = 0, the qz-side switch
    conducts y when qz = 1; behaviorally identical to akers_eval(x, y, qz).
    """
    validate_primitive(state)
    return x if state.qz == 0 else y


def _resolve(src: ZSource, variables: Mapping[str, Bit], stored: Sequence[Bit]) -> Bit:
    if isinstance(src, Const):
        return src.value
    if isinstance(src, Var):
        if src.name not in variables:
            raise UnboundVariable(f"no value bound for variable {src.name!r}")
        return _check_bit(variables[src.name], f"variable {src.name!r}")
    if src.index >= len(stored):
        raise MissingStoredBit(f"stored bit {src.index} not supplied")
    return _check_bit(stored[src.index], f"stored bit {src.index}")


def grid_eval(
    g: AkersGrid,
    variables: Mapping[str, Bit] | None = None,
    stored: Sequence[Bit] = (),
) -> tuple[Bit, list[list[Bit]]]:
    """Evaluate the array; returns (output, full cell-value matrix).

    X of a top-row cell is 0, Y of a leftmost-column cell is 1; every other
    cell reads its upper and left neighbors. The output is the lower-right
    value, complemented when the grid's invert flag is set.
    """
    variables = variables or {}
    f = [[0] * g.cols for _ in range(g.rows)]
    for i in range(g.rows):
        for j in range(g.cols):
            x = f[i - 1][j] if i > 0 else 0
            y = f[i][j - 1] if j > 0 else 1
            z = _resolve(g.z[i][j], variables, stored)
            f[i][j] = (x & (1 - z)) | (y & z)
    out = f[g.rows - 1][g.cols - 1]
    if g.invert_output:
        out = 1 - out
    return out, f


@dataclass(frozen=True)
class TruthTable:
    num_vars: int
    var_names: tuple[str, ...]
    outputs: tuple[Bit, ...]

    def __post_init__(self):
        if len(self.outputs) != 1 << self.num_vars:
            raise AkersError("truth table must have 2^num_vars outputs")


def truth_table(g: AkersGrid, stored: Sequence[Bit] = (), max_vars: int = 20) -> TruthTable:
    """Exhaustive table over all variable assignments in counting order.

    The first-appearing variable is the most significant input bit.
    """
    names = g.var_names()
    if len(names) > max_vars:
        raise TooManyVariables(f"{len(names)} variables exceeds limit {max_vars}")
    outputs = []
    for bits in itertools.product((0, 1), repeat=len(names)):
        assignment = dict(zip(names, bits))
        out, _ = grid_eval(g, assignment, stored)
        outputs.append(out)
    return TruthTable(num_vars=len(names), var_names=names, outputs=tuple(outputs))


def build_nand(n: int = 2) -> AkersGrid:
    """n-input AND chain (1 x n row of variable cells) with inverted output.

    Cell j computes the AND of the first j+1 inputs: the leftmost cell turns
    the boundary Y = 1 into its variable, and each later cell guards the
    running product with its own variable. Cell count grows linearly with n.
    """
    if n < 2:
        raise ArityOutOfRange("NAND needs at least 2 inputs")
    names = _input_names(n)
    return grid([[Var(nm) for nm in names]], invert_output=True)


def build_nor() -> AkersGrid:
    """Two-input NOR: two vertically stacked variable cells, output inverted.

    The upper cell produces A; the lower cell computes A*~B + B = A + B.
    """
    return grid([[Var("A")], [Var("B")]], invert_output=True)


def _input_names(n: int) -> list[str]:
    letters = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    if n <= len(letters):
        return [letters[i] for i in range(n)]
    return [f"A{i}" for i in range(n)]


def build_xor(n: int) -> AkersGrid:
    """n-input parity as a single Akers array.

    The array is a trellis read from the output corner: every monotone
    up/left lattice path contributes the AND of the Z values it exits
    through horizontally and the complements of those it climbs past
    vertically, so an up-step past a variable cell is the only way to mint
    a negated literal. One designated path realizes each odd-weight minterm:
    variable column k lets a path either exit sideways (emitting x_k) or
    climb to a private landing row (emitting ~x_k), and the landing offsets
    are powers of two so every input combination ends on its own row. A
    verification gauntlet west of the trellis then re-emits each surviving
    row's full minterm, row by row: positive literals as horizontal exits,
    negative ones as mandatory climbs over matching variable cells. Any
    stray path that wanders onto a row it does not belong to hits a
    contradicting literal and evaluates to zero, while even-weight rows are
    simply given no exit. Cell count grows geometrically in n.
    """
    if not 2 <= n <= 8:
        raise ArityOutOfRange("parity builder supports 2..8 inputs")
    names = [f"x{i}" for i in range(1, n + 1)]
    block = 2 * n + 2  # rows reserved per path: leaf row + gauntlet ladder
    n_rows = block * (1 << n) + 1
    n_cols = 2 * n + 1  # gauntlet stages | exit gate | variable columns
    base = block * (1 << n)  # bottom row, where the all-positive path starts

    zero = Const(0)
    z = [[zero] * n_cols for _ in range(n_rows)]

    # Variable columns, rightmost = x_n. A rank's set bits say which
    # variables the path climbed (negated); row = base - block * rank.
    for k in range(n, 0, -1):
        col = n + k
        off = block * (1 << (k - 1))
        for prefix in range(0, 1 << n, 1 << k):
            row = base - block * prefix
            z[row][col] = Var(names[k - 1])
            z[row - off][col] = Const(1)  # landing for the climb

    # Gauntlet. Ranks with an odd number of clear bits are the parity
    # minterms; everything else gets no exit gate and dies at the west edge.
    for rank in range(1 << n):
        row = base - block * rank
        neg = [names[k] for k in range(n) if rank >> k & 1]
        pos = [nm for nm in names if nm not in neg]
        if len(pos) % 2 == 0:
            continue  # even-weight minterm: leave its lane all-zero
        z[row][n] = Var(pos[0])  # exit gate; re-absorbed by its own path
        cur = row
        for stage in range(n):
            col = n - 1 - stage
            z[cur][col] = zero  # close the lane, forcing a climb
            if neg:
                z[cur - 1][col] = Var(neg[stage % len(neg)])
                z[cur - 2][col] = Var(pos[stage % len(pos)])
                cur -= 2
            else:
                z[cur - 1][col] = Var(pos[stage % len(pos)])
                cur -= 1

    return grid(z)
