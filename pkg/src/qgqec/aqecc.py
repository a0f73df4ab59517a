"""Quasi-cyclic code construction: presets, shift generators, brute-force
minimum distance, exhaustive minimum-distance decoding, and check operators.

Bit-vectors are '0'/'1' strings (qubit 0 leftmost) at the API surface and
integers internally, leftmost character at the most significant bit so that
lexicographic order on strings equals integer order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from qgqec import gf2, pauli
from qgqec._bits import bits_to_int, int_to_bits, popcount, rotl
from qgqec.cases import CaseId

MAX_LOGICAL = 20  # 2^N codeword enumeration cap


def correctable_errors(d: int) -> int:
    """Capability P = floor((d - 1) / 2)."""
    if d < 1:
        raise ValueError("distance must be >= 1")
    return (d - 1) // 2


def cyclic_shift(v: str, i: int) -> str:
    """Shift so output position p reads input position (p + i) mod len(v)."""
    if not v:
        return v
    n = len(v)
    return int_to_bits(rotl(bits_to_int(v), i, n), n)


@dataclass(frozen=True)
class CodeSpec:
    m_physical: int
    n_logical: int
    distance: int
    capability: int

    def __post_init__(self):
        if not 1 <= self.n_logical <= self.m_physical:
            raise ValueError("need 1 <= N <= M")
        p = self.capability
        if p != correctable_errors(self.distance):
            raise ValueError("capability must equal floor((d-1)/2)")
        if not 2 * p + 1 <= self.distance <= 2 * p + 2:
            raise ValueError("distance outside [2P+1, 2P+2]")


@dataclass(frozen=True)
class QCCode:
    spec: CodeSpec
    base: str
    stride: int
    generator_rows: tuple[str, ...]
    checks: tuple[str, ...]

    def __post_init__(self):
        m, n = self.spec.m_physical, self.spec.n_logical
        rows = [bits_to_int(r) for r in self.generator_rows]
        if len(rows) != n or any(len(r) != m for r in self.generator_rows):
            raise ValueError("generator rows must be N bit-vectors of length M")
        if gf2.rank(rows, m) != n:
            raise ValueError("generator rows are linearly dependent")
        if min_distance(list(self.generator_rows)) != self.spec.distance:
            raise ValueError("brute-force distance does not match spec")
        for h in self.checks:
            hv = bits_to_int(h)
            if any(gf2.dot(hv, r) for r in rows):
                raise ValueError("check not orthogonal to generator rows")

    def codewords(self) -> list[int]:
        """All 2^N codewords as integers, indexed by logical bits."""
        m, n = self.spec.m_physical, self.spec.n_logical
        rows = [bits_to_int(r) for r in self.generator_rows]
        out = []
        for l in range(1 << n):
            v = 0
            for j in range(n):
                if l >> (n - 1 - j) & 1:
                    v ^= rows[j]
            out.append(v)
        return out

    def to_json(self) -> str:
        s = self.spec
        payload = {
            "m": s.m_physical,
            "n": s.n_logical,
            "d": s.distance,
            "p": s.capability,
            "stride": self.stride,
            "base": self.base,
            "rows": list(self.generator_rows),
            "checks": list(self.checks),
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "QCCode":
        d = json.loads(text)
        spec = CodeSpec(d["m"], d["n"], d["d"], d["p"])
        return cls(spec, d["base"], d["stride"], tuple(d["rows"]), tuple(d["checks"]))


def min_distance(rows: list[str]) -> int:
    """Minimum Hamming weight over all nonzero GF(2) row combinations.

    Gray-code enumeration of the 2^N - 1 combinations; returns 0 when the
    rows are dependent (some nonzero combination cancels).
    """
    if not rows:
        raise ValueError("need at least one row")
    ints = [bits_to_int(r) for r in rows]
    if all(v == 0 for v in ints):
        raise ValueError("all rows are zero")
    n = len(ints)
    if n > MAX_LOGICAL:
        raise ValueError(f"too many rows to enumerate ({n} > {MAX_LOGICAL})")
    best = None
    acc = 0
    for i in range(1, 1 << n):
        acc ^= ints[(i & -i).bit_length() - 1]
        w = popcount(acc)
        if best is None or w < best:
            best = w
    return best


def build_qc_code(case) -> QCCode:
    """Construct the preset quasi-cyclic code for one of C1..C4.

    k = 1 presets use the weight-d prefix base directly; k > 1 presets take
    the lexicographically first base whose stride-shifted rows are full rank
    with brute-force distance exactly d.
    """
    case = case if isinstance(case, CaseId) else CaseId.parse(case)
    m, n, d = case.m_physical, case.n_logical, case.distance
    stride = m // n
    if n == 1:
        base_int = ((1 << d) - 1) << (m - d)
        row_ints = [base_int]
    else:
        base_int, row_ints = _search_base(m, n, d, stride)
    rows = tuple(int_to_bits(v, m) for v in row_ints)
    checks = tuple(int_to_bits(h, m) for h in gf2.null_space(row_ints, m))
    spec = CodeSpec(m, n, d, correctable_errors(d))
    return QCCode(spec, int_to_bits(base_int, m), stride, rows, checks)


def _search_base(m: int, n: int, d: int, stride: int) -> tuple[int, list[int]]:
    for v in range(1, 1 << m):
        rows = [rotl(v, j * stride, m) for j in range(n)]
        if gf2.rank(rows, m) != n:
            continue
        if min_distance([int_to_bits(r, m) for r in rows]) == d:
            return v, rows
    raise RuntimeError(
        f"quasi-cyclic base search exhausted for [{m},{n},{d}] stride {stride}; "
        "this indicates a broken preset, not a user error"
    )


def encode_logical(code: QCCode, logical_bits: str) -> str:
    """XOR of the generator rows selected by the logical bits."""
    n, m = code.spec.n_logical, code.spec.m_physical
    if len(logical_bits) != n:
        raise ValueError(f"expected {n} logical bits, got {len(logical_bits)}")
    l = bits_to_int(logical_bits)
    return int_to_bits(code.codewords()[l], m)


def decode(code: QCCode, received: str) -> tuple[str, str, int]:
    """Exhaustive minimum-distance decoding.

    Returns (logical_bits, corrected_codeword, error_weight); distance ties
    go to the lexicographically smallest logical bits.
    """
    m, n = code.spec.m_physical, code.spec.n_logical
    if len(received) != m:
        raise ValueError(f"expected {m} bits, got {len(received)}")
    r = bits_to_int(received)
    best_l, best_d = 0, m + 1
    for l, cw in enumerate(code.codewords()):
        dist = popcount(r ^ cw)
        if dist < best_d:
            best_l, best_d = l, dist
    return int_to_bits(best_l, n), int_to_bits(code.codewords()[best_l], m), best_d


def stabilizer_check_operators(code: QCCode) -> list[pauli.PauliOperator]:
    """Z-type Paulis on each check's support.

    Each commutes with every X-type logical (orthogonal supports mod 2) and
    anticommutes with any X error overlapping it an odd number of times.
    """
    m = code.spec.m_physical
    ops = []
    for h in code.checks:
        positions = [i for i, c in enumerate(h) if c == "1"]
        ops.append(pauli.z_operator(m, positions))
    return ops
