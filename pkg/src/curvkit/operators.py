"""Curvature-operator actions and the linear structure decisions built on
them.

Two tensor-valued operations extend a (0,k) tensor to a (0,k+2) tensor: the
action of a curvature-type operator as a derivation, and the endomorphism
action attached to a symmetric (0,2) tensor.  Everything else here reduces a
geometric yes/no question to an exact linear system over expressions and
reports witnesses that can be re-verified by substitution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .curvature import CurvatureBundle
from .expr import (Atom, Expression, ONE, ZERO, _KIND_COORD, _KIND_TRIG)
from .linsolve import LinearEquation, solve_linear
from .parsing import (IdentityAst, TDot, TName, TNabla, TQ, TWedge)
from .tensor import (Metric, Tensor, TensorError, covariant_derivative,
                     kulkarni_nomizu)


def dot_action(d: Tensor, h: Tensor, g: Metric) -> Tensor:
    """Act the operator attached to d on h, producing a (0,k+2) tensor.

    Component rule: (d.h)[i1..ik, x, y] = -sum over slots s and l of
    d^l[x, y, i_s] * h[.. l at s ..], where the l index is raised with g
    on d's fourth slot.
    """
    if d.valence != 4:
        raise TensorError("operator tensor must have valence 4")
    if ("anti", 0, 1) not in d.descriptor.ops:
        raise TensorError("operator tensor must be antisymmetric in its "
                          "first index pair")
    chart = h.chart
    n = chart.dim
    k = h.valence

    raised = {}
    for x in range(n):
        for y in range(n):
            for a in range(n):
                row = []
                for l in range(n):
                    w = ZERO
                    for m in range(n):
                        gim = g.upper(l, m)
                        if gim.is_zero:
                            continue
                        w = w + gim * d.get((x, y, a, m))
                    if not w.is_zero:
                        row.append((l, w))
                raised[(x, y, a)] = tuple(row)

    desc = h.descriptor.with_extra(("anti", k, k + 1))

    def entry(idx):
        head, x, y = idx[:k], idx[k], idx[k + 1]
        total = ZERO
        for s in range(k):
            for l, w in raised[(x, y, head[s])]:
                total = total - w * h.get(head[:s] + (l,) + head[s + 1:])
        return total

    return Tensor.compute(chart, k + 2, desc, entry)


def tachibana(a: Tensor, h: Tensor) -> Tensor:
    """Endomorphism action Q(a,h): a (0,k+2) tensor, antisymmetric in the
    trailing pair.

    Component rule: Q(a,h)[i1..ik, x, y] = sum over slots s of
    a[x, i_s] * h[.. y at s ..] - a[y, i_s] * h[.. x at s ..].
    """
    if a.valence != 2:
        raise TensorError("endomorphism base must have valence 2")
    if ("sym", 0, 1) not in a.descriptor.ops:
        raise TensorError("endomorphism base must be declared symmetric")
    chart = h.chart
    k = h.valence
    desc = h.descriptor.with_extra(("anti", k, k + 1))

    def entry(idx):
        head, x, y = idx[:k], idx[k], idx[k + 1]
        total = ZERO
        for s in range(k):
            i_s = head[s]
            ax = a.get((x, i_s))
            ay = a.get((y, i_s))
            if not ax.is_zero:
                total = total + ax * h.get(head[:s] + (y,) + head[s + 1:])
            if not ay.is_zero:
                total = total - ay * h.get(head[:s] + (x,) + head[s + 1:])
        return total

    return Tensor.compute(chart, k + 2, desc, entry)


# ---------------------------------------------------------------------------
# identity checking


def evaluate_tensor_ast(node, bundle: CurvatureBundle, cache: dict) -> Tensor:
    """Evaluate a tensor AST node against a bundle, memoized by node."""
    if node in cache:
        return cache[node]
    if isinstance(node, TName):
        out = bundle.tensor(node.name)
    elif isinstance(node, TDot):
        out = dot_action(evaluate_tensor_ast(node.left, bundle, cache),
                         evaluate_tensor_ast(node.right, bundle, cache),
                         bundle.metric)
    elif isinstance(node, TQ):
        out = tachibana(evaluate_tensor_ast(node.metric_like, bundle, cache),
                        evaluate_tensor_ast(node.operand, bundle, cache))
    elif isinstance(node, TWedge):
        out = kulkarni_nomizu(evaluate_tensor_ast(node.left, bundle, cache),
                              evaluate_tensor_ast(node.right, bundle, cache))
    elif isinstance(node, TNabla):
        if isinstance(node.operand, TName):
            out = bundle.nabla(node.operand.name)
        else:
            out = covariant_derivative(
                evaluate_tensor_ast(node.operand, bundle, cache),
                bundle.connection)
    else:
        raise TensorError(f"unsupported tensor node {node!r}")
    cache[node] = out
    return out


@dataclass(frozen=True)
class IdentityWitness:
    """Why an identity fails.

    kind "component": concrete identity, `value` is the nonzero residual at
    `component`.  kind "ratio": the single unknown would need two different
    values; `anchor_component` forces `anchor_value`, `component` forces
    `value`.  kind "forced": after eliminating the unknowns the equation at
    `component` still has the nonzero residual `value`.
    """
    kind: str
    component: tuple
    value: Expression
    unknown: str = ""
    anchor_component: tuple | None = None
    anchor_value: Expression | None = None


@dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    solved: dict | None            # unknown -> Expression, free ones at 0
    free: tuple
    witness: IdentityWitness | None


def check_identity(ast: IdentityAst, bundle: CurvatureBundle,
                   cache: dict | None = None) -> IdentityCheck:
    """Decide a tensor identity, solving for any unknown scalars."""
    if cache is None:
        cache = {}
    concrete = []
    unknown_terms = {u: [] for u in ast.unknowns}
    for side, sgn in ((ast.left, 1), (ast.right, -1)):
        for term in side:
            t = evaluate_tensor_ast(term.tensor, bundle, cache)
            coeff = term.coeff if sgn == 1 else -term.coeff
            if term.unknown is None:
                concrete.append((coeff, t))
            else:
                unknown_terms[term.unknown].append((coeff, t))

    n = bundle.dim
    valence = ast.valence

    def residual(idx):
        v = ZERO
        for coeff, t in concrete:
            tv = t.get(idx)
            if not tv.is_zero:
                v = v + coeff * tv
        return v

    if not ast.unknowns:
        for idx in itertools.product(range(n), repeat=valence):
            v = residual(idx)
            if not v.is_zero:
                return IdentityCheck(False, None, (), IdentityWitness(
                    "component", idx, v))
        return IdentityCheck(True, {}, (), None)

    equations = []
    by_label = {}
    for idx in itertools.product(range(n), repeat=valence):
        coeffs = {}
        for u, terms in unknown_terms.items():
            cv = ZERO
            for coeff, t in terms:
                tv = t.get(idx)
                if not tv.is_zero:
                    cv = cv + coeff * tv
            if not cv.is_zero:
                coeffs[u] = cv
        rhs = -residual(idx)
        if not coeffs and rhs.is_zero:
            continue
        label = "".join(str(i + 1) for i in idx)
        equations.append(LinearEquation(coeffs, rhs, label))
        by_label[label] = (idx, coeffs, rhs)

    result = solve_linear(equations, ast.unknowns)
    if result.consistent:
        return IdentityCheck(True, result.particular(), result.free, None)

    idx, coeffs, rhs = by_label[result.witness_label]
    if len(ast.unknowns) == 1:
        u = ast.unknowns[0]
        cu = coeffs.get(u, ZERO)
        anchor_label = result.pivot_labels.get(u)
        if not cu.is_zero and anchor_label is not None:
            anchor_idx = by_label[anchor_label][0]
            return IdentityCheck(False, None, (), IdentityWitness(
                "ratio", idx, rhs / cu, unknown=u,
                anchor_component=anchor_idx,
                anchor_value=result.partial[u]))
    return IdentityCheck(False, None, (), IdentityWitness(
        "forced", idx, result.witness_residual))


# ---------------------------------------------------------------------------
# recurrence of the induced 2-forms / 1-forms


@dataclass(frozen=True)
class RecurrenceResult:
    holds: bool
    covector: tuple | None         # particular solution, free parts at 0
    free: tuple
    witness_component: tuple | None = None
    witness_residual: Expression | None = None


def _solve_covector(equations, by_label, names, n) -> RecurrenceResult:
    result = solve_linear(equations, names)
    if not result.consistent:
        return RecurrenceResult(False, None, (),
                                by_label[result.witness_label],
                                result.witness_residual)
    particular = result.particular()
    covector = tuple(particular[u] for u in names)
    # recurrence means a nonzero 1-form; a system whose only solution is
    # the zero covector is a failure, not a vacuous success
    if not result.free and all(v.is_zero for v in covector):
        return RecurrenceResult(False, covector, ())
    return RecurrenceResult(True, covector, result.free)


def two_form_recurrence(bundle: CurvatureBundle, name: str) -> RecurrenceResult:
    """Decide whether the 2-forms induced by a (0,4) curvature-type tensor
    are recurrent: the cyclic first-derivative sum over (i,j,k) must equal
    the same cyclic sum weighted by an unknown 1-form.
    """
    d = bundle.tensor(name)
    nd = bundle.nabla(name)
    n = bundle.dim
    names = [f"P{i + 1}" for i in range(n)]
    equations = []
    by_label = {}
    for idx in itertools.product(range(n), repeat=5):
        i, j, k, x, y = idx
        lhs = (nd.get((j, k, x, y, i)) + nd.get((k, i, x, y, j))
               + nd.get((i, j, x, y, k)))
        coeffs = {}
        for a, bb, cc in ((i, j, k), (j, k, i), (k, i, j)):
            dv = d.get((bb, cc, x, y))
            if dv.is_zero:
                continue
            u = names[a]
            coeffs[u] = coeffs.get(u, ZERO) + dv
        coeffs = {u: c for u, c in coeffs.items() if not c.is_zero}
        if not coeffs and lhs.is_zero:
            continue
        label = "".join(str(i + 1) for i in idx)
        equations.append(LinearEquation(coeffs, lhs, label))
        by_label[label] = idx
    return _solve_covector(equations, by_label, names, n)


def one_form_recurrence(bundle: CurvatureBundle, name: str) -> RecurrenceResult:
    """Same decision for the 1-forms induced by a symmetric (0,2) tensor."""
    z = bundle.tensor(name)
    nz = bundle.nabla(name)
    n = bundle.dim
    names = [f"P{i + 1}" for i in range(n)]
    equations = []
    by_label = {}
    for idx in itertools.product(range(n), repeat=3):
        i, j, x = idx
        lhs = nz.get((j, x, i)) - nz.get((i, x, j))
        coeffs = {}
        zj = z.get((j, x))
        if not zj.is_zero:
            coeffs[names[i]] = zj
        zi = z.get((i, x))
        if not zi.is_zero:
            coeffs[names[j]] = coeffs.get(names[j], ZERO) - zi
        coeffs = {u: c for u, c in coeffs.items() if not c.is_zero}
        if not coeffs and lhs.is_zero:
            continue
        label = "".join(str(i + 1) for i in idx)
        equations.append(LinearEquation(coeffs, lhs, label))
        by_label[label] = idx
    return _solve_covector(equations, by_label, names, n)


def recurrent_tensor(bundle: CurvatureBundle, name: str) -> RecurrenceResult:
    """Decide plain recurrence nabla T = pi (x) T for an unknown 1-form."""
    t = bundle.tensor(name)
    nt = bundle.nabla(name)
    n = bundle.dim
    names = [f"P{i + 1}" for i in range(n)]
    equations = []
    by_label = {}
    for idx in itertools.product(range(n), repeat=t.valence):
        tv = t.get(idx)
        for x in range(n):
            lhs = nt.get(idx + (x,))
            if tv.is_zero and lhs.is_zero:
                continue
            coeffs = {names[x]: tv} if not tv.is_zero else {}
            label = "".join(str(i + 1) for i in idx + (x,))
            equations.append(LinearEquation(coeffs, lhs, label))
            by_label[label] = idx + (x,)
    return _solve_covector(equations, by_label, names, n)


# ---------------------------------------------------------------------------
# Ricci decomposition


def matrix_rank(rows) -> int:
    """Rank of a matrix of Expressions by Gaussian elimination."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    pr = 0
    for c in range(ncols):
        pivot = next((r for r in range(pr, len(rows))
                      if not rows[r][c].is_zero), None)
        if pivot is None:
            continue
        rows[pr], rows[pivot] = rows[pivot], rows[pr]
        pv = rows[pr][c]
        for r in range(len(rows)):
            if r == pr or rows[r][c].is_zero:
                continue
            f = rows[r][c] / pv
            rows[r] = [a - f * b for a, b in zip(rows[r], rows[pr])]
        pr += 1
        if pr == len(rows):
            break
    return pr


def _monomial_scale(beta0: Expression) -> Expression:
    """Square scale factor pulled out of a monomial-ratio coefficient.

    Collects the even powers of coordinate and trig atoms of beta0 into a
    monomial s, so that beta0/s^2 keeps only the odd / non-coordinate part.
    Used to pick a display representative of a rank-1 factorization.
    """
    num, den = beta0.num.terms, beta0.den.terms
    if len(num) != 1 or len(den) != 1:
        return ONE
    net = {}
    for atom, e in next(iter(num)):
        net[atom] = net.get(atom, 0) + e
    for atom, e in next(iter(den)):
        net[atom] = net.get(atom, 0) - e
    s = ONE
    for atom in sorted(net, key=lambda a: a.key):
        e = net[atom]
        if atom.kind in (_KIND_COORD, _KIND_TRIG) and e != 0 and e % 2 == 0:
            s = s * Expression.from_atom(atom) ** (e // 2)
    return s


def rank_one_factor(rows, g: Metric):
    """Write a symmetric matrix as beta * eta (x) eta, or return None.

    Returns (beta, eta, norm2) with eta a covector tuple and norm2 its
    g-square.  None when the matrix is zero or has rank above one.
    """
    n = len(rows)
    anchor = next((i for i in range(n) if not rows[i][i].is_zero), None)
    if anchor is None:
        return None
    beta0 = rows[anchor][anchor]
    eta0 = [rows[anchor][j] / beta0 for j in range(n)]
    for j in range(n):
        for k in range(n):
            if not (rows[j][k] == beta0 * eta0[j] * eta0[k]):
                return None
    s = _monomial_scale(beta0)
    beta = beta0 / (s * s)
    eta = tuple(e * s for e in eta0)
    norm2 = ZERO
    for j in range(n):
        for k in range(n):
            guu = g.upper(j, k)
            if not guu.is_zero:
                norm2 = norm2 + guu * eta[j] * eta[k]
    return beta, eta, norm2


@dataclass(frozen=True)
class RicciDecomposition:
    """Outcome of splitting the Ricci tensor as alpha*g + beta*eta(x)eta."""
    kind: str                     # einstein | quasi-einstein | ricci-simple | none
    alpha: Expression
    beta: Expression | None
    eta: tuple | None
    eta_norm2: Expression | None
    rank: int                     # rank of S - alpha*g
    nullity: int


def _poly1_mod(p, q):
    """Remainder of univariate polynomials with Expression coefficients
    (ascending coefficient lists)."""
    p = list(p)
    while len(p) >= len(q):
        lead = p[-1] / q[-1]
        shift = len(p) - len(q)
        for i, qc in enumerate(q):
            p[shift + i] = p[shift + i] - lead * qc
        while p and p[-1].is_zero:
            p.pop()
        if not p:
            break
    return p


def _poly1_gcd(polys):
    acc = None
    for p in polys:
        p = list(p)
        while p and p[-1].is_zero:
            p.pop()
        if not p:
            continue
        if acc is None:
            acc = p
            continue
        a, b = acc, p
        while b:
            a, b = b, _poly1_mod(a, b)
        acc = a
    return acc or []


def ricci_decompose(bundle: CurvatureBundle) -> RicciDecomposition:
    """Classify the Ricci tensor against the quasi-Einstein family."""
    s = bundle.ricci
    g = bundle.metric
    n = bundle.dim
    kappa = bundle.kappa

    s_rows = [[s.get((i, j)) for j in range(n)] for i in range(n)]
    g_rows = [[g.lower(i, j) for j in range(n)] for i in range(n)]

    def shifted(alpha):
        return [[s_rows[i][j] - alpha * g_rows[i][j] for j in range(n)]
                for i in range(n)]

    def build(kind, alpha, rows):
        factored = rank_one_factor(rows, g)
        if factored is None:
            return None
        beta, eta, norm2 = factored
        return RicciDecomposition(kind, alpha, beta, eta, norm2, 1, n - 1)

    alpha_e = kappa / n
    e_rows = shifted(alpha_e)
    rank_e = matrix_rank(e_rows)
    if rank_e == 0:
        return RicciDecomposition("einstein", alpha_e, None, None, None, 0, n)
    if matrix_rank(s_rows) <= 1:
        got = build("ricci-simple", ZERO, s_rows)
        if got is not None:
            return got
    if rank_e == 1:
        got = build("quasi-einstein", alpha_e, e_rows)
        if got is not None:
            return got

    # Last resort: an alpha making S - alpha*g rank <= 1 must be a common
    # root of every 2x2 minor, each a quadratic in alpha.
    minors = []
    for i, j in itertools.combinations(range(n), 2):
        for k, l in itertools.combinations(range(n), 2):
            c0 = s_rows[i][k] * s_rows[j][l] - s_rows[i][l] * s_rows[j][k]
            c1 = -(s_rows[i][k] * g_rows[j][l] + g_rows[i][k] * s_rows[j][l]
                   - s_rows[i][l] * g_rows[j][k] - g_rows[i][l] * s_rows[j][k])
            c2 = g_rows[i][k] * g_rows[j][l] - g_rows[i][l] * g_rows[j][k]
            poly = [c0, c1, c2]
            while poly and poly[-1].is_zero:
                poly.pop()
            if poly:
                minors.append(poly)
    common = _poly1_gcd(minors)
    if len(common) == 2:
        alpha = -common[0] / common[1]
        rows = shifted(alpha)
        if matrix_rank(rows) <= 1:
            got = build("quasi-einstein", alpha, rows)
            if got is not None:
                return got
    rank_s = matrix_rank(s_rows)
    return RicciDecomposition("none", ZERO, None, None, None, rank_s,
                              n - rank_s)


@dataclass(frozen=True)
class PureRadiationResult:
    holds: bool
    beta: Expression | None = None
    eta: tuple | None = None
    eta_norm2: Expression | None = None
    reason: str = ""


def pure_radiation(bundle: CurvatureBundle) -> PureRadiationResult:
    """Energy-momentum of pure-radiation type: rank one with a null factor."""
    t = bundle.tensor("T")
    n = bundle.dim
    if t.is_zero:
        return PureRadiationResult(False, reason="energy-momentum vanishes")
    rows = [[t.get((i, j)) for j in range(n)] for i in range(n)]
    factored = rank_one_factor(rows, bundle.metric)
    if factored is None:
        return PureRadiationResult(False,
                                   reason="energy-momentum rank above one")
    beta, eta, norm2 = factored
    if not norm2.is_zero:
        return PureRadiationResult(False, beta, eta, norm2,
                                   reason="factor covector is not null")
    return PureRadiationResult(True, beta, eta, norm2)


# ---------------------------------------------------------------------------
# compatibility


@dataclass(frozen=True)
class CompatibilityResult:
    holds: bool
    witness_component: tuple | None = None
    witness_value: Expression | None = None


def compatibility_check(d: Tensor, e: Tensor, g: Metric) -> CompatibilityResult:
    """Zero-test the compatibility sum of e against a curvature-type d.

    The condition is the cyclic sum over (i1,i2,i3) of
    d(e_i1, e_i2, e_x, Ee_i3), with the endomorphism E raised from e by
    g(X, E Y) = e(Y, X).  For pair-symmetric d this is the same condition
    as putting E on the first slot, but it also extends correctly to
    operators without the pair symmetry (the projective-type tensor).
    """
    chart = d.chart
    n = chart.dim
    raised = []
    for c in range(n):
        row = []
        for l in range(n):
            w = ZERO
            for m in range(n):
                gv = g.upper(l, m)
                if gv.is_zero:
                    continue
                w = w + gv * e.get((c, m))
            if not w.is_zero:
                row.append((l, w))
        raised.append(tuple(row))

    def term(a, b, x, c):
        v = ZERO
        for l, w in raised[c]:
            dv = d.get((a, b, x, l))
            if not dv.is_zero:
                v = v + w * dv
        return v

    for idx in itertools.product(range(n), repeat=4):
        i1, i2, i3, x = idx
        total = (term(i1, i2, x, i3) + term(i2, i3, x, i1)
                 + term(i3, i1, x, i2))
        if not total.is_zero:
            return CompatibilityResult(False, idx, total)
    return CompatibilityResult(True)


@dataclass(frozen=True)
class CompatibleFamily:
    """General solution of the compatibility equations for an unknown (0,2)
    tensor: entries are Expressions in opaque free parameters."""
    matrix: tuple                 # n x n of Expressions
    params: tuple                 # free parameter names, display order
    symmetric: bool

    @property
    def param_count(self) -> int:
        return len(self.params)


def compatible_space(d: Tensor, g: Metric, symmetric: bool = False,
                     verify: bool = True) -> CompatibleFamily:
    """Solve for every (0,2) tensor compatible with a curvature-type d.

    By default the unknown tensor is a general n x n matrix; with
    symmetric=True the unknown is constrained symmetric up front.
    """
    chart = d.chart
    n = chart.dim

    def base_name(m, a):
        if symmetric and m > a:
            m, a = a, m
        return f"a{m + 1}{a + 1}"

    unknowns = []
    for a in range(n):
        for m in range(n):
            u = base_name(m, a)
            if u not in unknowns:
                unknowns.append(u)

    dd_cache = {}

    def dd(m, a, b, x):
        key = (m, a, b, x)
        v = dd_cache.get(key)
        if v is None:
            v = ZERO
            for l in range(n):
                gv = g.upper(m, l)
                if gv.is_zero:
                    continue
                v = v + gv * d.get((a, b, x, l))
            dd_cache[key] = v
        return v

    equations = []
    for idx in itertools.product(range(n), repeat=4):
        i1, i2, i3, x = idx
        coeffs = {}
        for a, b, c in ((i1, i2, i3), (i2, i3, i1), (i3, i1, i2)):
            for m in range(n):
                cv = dd(m, a, b, x)
                if cv.is_zero:
                    continue
                u = base_name(c, m)
                coeffs[u] = coeffs.get(u, ZERO) + cv
        coeffs = {u: c for u, c in coeffs.items() if not c.is_zero}
        if not coeffs:
            continue
        label = "".join(str(i + 1) for i in idx)
        equations.append(LinearEquation(coeffs, ZERO, label))

    result = solve_linear(equations, unknowns)
    if not result.consistent:
        raise TensorError("homogeneous compatibility system reported "
                          "inconsistent")

    taken = set(chart.coords) | set(chart.functions) | set(chart.constants)
    prefix = next(p for p in ("a", "e", "q", "u0")
                  if not any(f"{p}{i + 1}{j + 1}" in taken
                             for i in range(n) for j in range(n)))
    atom_of = {u: Atom.constant(prefix + u[1:]) for u in result.free}

    def as_expression(form):
        v = form.const
        for u, c in form.coeffs.items():
            v = v + c * Expression.from_atom(atom_of[u])
        return v

    matrix = tuple(tuple(as_expression(result.solution[base_name(i, j)])
                         for j in range(n)) for i in range(n))
    params = tuple(prefix + u[1:] for u in unknowns if u in result.free)

    if verify:
        for idx in itertools.product(range(n), repeat=4):
            i1, i2, i3, x = idx
            total = ZERO
            for a, b, c in ((i1, i2, i3), (i2, i3, i1), (i3, i1, i2)):
                for m in range(n):
                    cv = dd(m, a, b, x)
                    if not cv.is_zero:
                        total = total + cv * matrix[c][m]
            if not total.is_zero:
                raise TensorError("compatible family fails substitution "
                                  f"at {idx}")

    return CompatibleFamily(matrix, params, symmetric)


# ---------------------------------------------------------------------------
# weak Ricci symmetry


@dataclass(frozen=True)
class WeakRicciResult:
    holds: bool
    a: tuple | None = None
    b: tuple | None = None
    d: tuple | None = None
    free: tuple = ()
    witness_component: tuple | None = None
    witness_residual: Expression | None = None


def weakly_ricci_symmetric(bundle: CurvatureBundle) -> WeakRicciResult:
    """Solve nabla S = A(x)S(y,z) + B(y)S(x,z) + D(z)S(y,x) for covectors."""
    s = bundle.ricci
    ns = bundle.nabla("S")
    n = bundle.dim
    a_names = [f"A{i + 1}" for i in range(n)]
    b_names = [f"B{i + 1}" for i in range(n)]
    d_names = [f"D{i + 1}" for i in range(n)]
    names = a_names + b_names + d_names
    equations = []
    by_label = {}
    for idx in itertools.product(range(n), repeat=3):
        x, y, z = idx
        lhs = ns.get((y, z, x))
        coeffs = {}
        for u, sv in ((a_names[x], s.get((y, z))),
                      (b_names[y], s.get((x, z))),
                      (d_names[z], s.get((y, x)))):
            if not sv.is_zero:
                coeffs[u] = coeffs.get(u, ZERO) + sv
        coeffs = {u: c for u, c in coeffs.items() if not c.is_zero}
        if not coeffs and lhs.is_zero:
            continue
        label = "".join(str(i + 1) for i in idx)
        equations.append(LinearEquation(coeffs, lhs, label))
        by_label[label] = idx
    result = solve_linear(equations, names)
    if not result.consistent:
        return WeakRicciResult(False,
                               witness_component=by_label[result.witness_label],
                               witness_residual=result.witness_residual)
    p = result.particular()
    return WeakRicciResult(True,
                           tuple(p[u] for u in a_names),
                           tuple(p[u] for u in b_names),
                           tuple(p[u] for u in d_names),
                           result.free)
