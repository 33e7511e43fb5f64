"""Exact linear solving over a coefficient field (internal helper)."""

from __future__ import annotations

from typing import List, Optional

from .field import Field, Scalar


def solve(field: Field, rows: List[List[Scalar]], rhs: List[Scalar]) -> Optional[List[Scalar]]:
    """One solution of rows * v = rhs, or None if inconsistent.

    Free variables are set to zero, so the result is deterministic.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, m) if not aug[r][col].is_zero()), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = aug[row][col].inverse()
        aug[row] = [v * inv for v in aug[row]]
        for r in range(m):
            if r != row and not aug[r][col].is_zero():
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if not aug[r][n].is_zero():
            return None
    solution = [field.zero()] * n
    for r, col in enumerate(pivots):
        solution[col] = aug[r][n]
    return solution


def nullspace_mod(rows: List[List[int]], p: int) -> List[List[int]]:
    """Basis of the nullspace of an integer matrix mod p (deterministic)."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    mat = [[v % p for v in r] for r in rows]
    pivots = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, m) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = pow(mat[row][col], -1, p)
        mat[row] = [v * inv % p for v in mat[row]]
        for r in range(m):
            if r != row and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [(a - factor * b) % p for a, b in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * n
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-mat[r][fc]) % p
        basis.append(vec)
    return basis


def row_space_mod(rows: List[List[int]], p: int) -> List[List[int]]:
    """Reduced row-echelon basis of the span of the given vectors mod p."""
    mat = [[v % p for v in r] for r in rows]
    n = len(mat[0]) if mat else 0
    basis = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = pow(mat[row][col], -1, p)
        mat[row] = [v * inv % p for v in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [(a - factor * b) % p for a, b in zip(mat[r], mat[row])]
        row += 1
    basis = [r for r in mat[:row]]
    return basis


def in_span_mod(basis_rref: List[List[int]], vec: List[int], p: int) -> bool:
    """Membership of vec in a span given by a reduced row-echelon basis mod p."""
    v = [x % p for x in vec]
    for row in basis_rref:
        lead = next((c for c, x in enumerate(row) if x), None)
        if lead is None:
            continue
        if v[lead]:
            factor = v[lead]
            v = [(a - factor * b) % p for a, b in zip(v, row)]
    return not any(v)
