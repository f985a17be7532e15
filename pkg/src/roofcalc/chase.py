"""Exact linear chase for cohomology dimension bookkeeping.

Connecting maps in long exact sequences and spectral-sequence differentials
have unknown ranks; everything else is linear.  Each unknown rank becomes a
variable, every cohomology dimension an affine form with unit coefficients,
and the chase is: eliminate variables through forced equalities (boundary
vanishing, injectivity at degree zero, symmetry identifications), then
tighten variable boxes by propagating the remaining inequalities.  Equality
elimination is what captures cancellations like h = a - x + (x - b) that
interval arithmetic alone cannot see.

Two model builders sit on top of the core system:

  * `spectral_flow` -- hypercohomology of a bounded complex with known term
    cohomology.  Differentials on every page move total degree up by one and
    kill equal dimensions from both antidiagonals, so the unknowns reduce to
    one flow variable per antidiagonal.
  * `les_chain` -- a chain of short exact sequences 0->K_{i-1}->M_i->K_i->0
    with the connecting ranks as variables.

All coefficients stay in {-1, 0, 1}; arithmetic is exact.
"""

from __future__ import annotations

from .errors import AmbiguityError


class Form:
    """Affine integer form: sum of coeff * var + const."""

    __slots__ = ("coeffs", "const")

    def __init__(self, coeffs: dict[int, int] | None = None, const: int = 0):
        self.coeffs = {v: c for v, c in (coeffs or {}).items() if c}
        self.const = const

    @staticmethod
    def of(const: int) -> "Form":
        return Form({}, const)

    @staticmethod
    def var(v: int) -> "Form":
        return Form({v: 1}, 0)

    def __add__(self, other: "Form | int") -> "Form":
        if isinstance(other, int):
            return Form(self.coeffs, self.const + other)
        out = dict(self.coeffs)
        for v, c in other.coeffs.items():
            out[v] = out.get(v, 0) + c
        return Form(out, self.const + other.const)

    def __sub__(self, other: "Form | int") -> "Form":
        if isinstance(other, int):
            return Form(self.coeffs, self.const - other)
        out = dict(self.coeffs)
        for v, c in other.coeffs.items():
            out[v] = out.get(v, 0) - c
        return Form(out, self.const - other.const)

    def __neg__(self) -> "Form":
        return Form({v: -c for v, c in self.coeffs.items()}, -self.const)

    def is_const(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        parts = [f"{c:+d}*v{v}" for v, c in sorted(self.coeffs.items())]
        return " ".join(parts + [f"{self.const:+d}"])


_UNBOUNDED = None


class LinearSystem:
    """Variables with integer boxes, substitutions, and >=0 constraints."""

    def __init__(self):
        self.boxes: list[list[int | None]] = []
        self.subs: dict[int, Form] = {}
        self.ineqs: list[Form] = []

    def new_var(self, lo: int = 0, hi: int | None = _UNBOUNDED) -> int:
        self.boxes.append([lo, hi])
        return len(self.boxes) - 1

    # -- substitution machinery ------------------------------------------

    def reduce(self, form: Form) -> Form:
        out = Form(form.coeffs, form.const)
        while True:
            hit = None
            for v in out.coeffs:
                if v in self.subs:
                    hit = v
                    break
            if hit is None:
                return out
            c = out.coeffs.pop(hit)
            sub = self.subs[hit]
            for v2, c2 in sub.coeffs.items():
                out.coeffs[v2] = out.coeffs.get(v2, 0) + c * c2
                if out.coeffs[v2] == 0:
                    del out.coeffs[v2]
            out.const += c * sub.const

    def add_eq(self, form: Form) -> None:
        """Impose form == 0 by eliminating one unit-coefficient variable."""
        f = self.reduce(form)
        if f.is_const():
            if f.const != 0:
                raise ArithmeticError(f"inconsistent chase: {f.const} == 0")
            return
        pivot = None
        for v, c in f.coeffs.items():
            if abs(c) == 1:
                pivot = (v, c)
                break
        if pivot is None:
            # all coefficients are +-1 in this application
            raise ArithmeticError(f"no unit pivot in {f}")
        v, c = pivot
        rest = Form({u: k for u, k in f.coeffs.items() if u != v}, f.const)
        # c*v + rest == 0  =>  v == -rest/c
        self.subs[v] = Form(
            {u: (-k if c == 1 else k) for u, k in rest.coeffs.items()},
            -rest.const if c == 1 else rest.const,
        )
        # fold the variable's old box into inequalities on the substitution
        lo, hi = self.boxes[v]
        sub = self.subs[v]
        if lo is not None:
            self.add_ge0(sub - lo)
        if hi is not None:
            self.add_ge0(Form.of(hi) - sub)

    def add_ge0(self, form: Form) -> None:
        self.ineqs.append(form)

    # -- bound propagation -------------------------------------------------

    def _form_bounds(self, f: Form) -> tuple[int | None, int | None]:
        lo: int | None = f.const
        hi: int | None = f.const
        for v, c in f.coeffs.items():
            blo, bhi = self.boxes[v]
            if c > 0:
                term_lo = None if blo is None else c * blo
                term_hi = None if bhi is None else c * bhi
            else:
                term_lo = None if bhi is None else c * bhi
                term_hi = None if blo is None else c * blo
            lo = None if (lo is None or term_lo is None) else lo + term_lo
            hi = None if (hi is None or term_hi is None) else hi + term_hi
        return lo, hi

    def propagate(self, max_sweeps: int = 2000) -> None:
        reduced = [self.reduce(f) for f in self.ineqs]
        reduced = [f for f in reduced if f.coeffs or f.const < 0]
        for f in reduced:
            if f.is_const() and f.const < 0:
                raise ArithmeticError(f"inconsistent chase: {f.const} >= 0")
        for _ in range(max_sweeps):
            changed = False
            for f in reduced:
                for v, c in f.coeffs.items():
                    other = Form({u: k for u, k in f.coeffs.items() if u != v}, f.const)
                    _, ohi = self._form_bounds(other)
                    if ohi is None:
                        continue
                    # c*v >= -other_true >= -ohi
                    box = self.boxes[v]
                    if c > 0:
                        new_lo = -(ohi // c)  # ceil(-ohi / c)
                        if box[0] is None or new_lo > box[0]:
                            box[0] = new_lo
                            changed = True
                    else:
                        new_hi = ohi // (-c)  # floor(ohi / -c)
                        if box[1] is None or new_hi < box[1]:
                            box[1] = new_hi
                            changed = True
                    if box[0] is not None and box[1] is not None and box[0] > box[1]:
                        raise ArithmeticError(
                            f"inconsistent chase: empty box for v{v}"
                        )
            if not changed:
                return
        raise ArithmeticError("chase propagation did not converge")

    def bounds(self, form: Form) -> tuple[int, int]:
        lo, hi = self._form_bounds(self.reduce(form))
        if lo is None or hi is None:
            raise AmbiguityError("quantity is unbounded in the chase")
        return lo, hi


def spectral_flow(
    system: LinearSystem,
    totals: dict[int, Form | int],
    *,
    low: int,
    high: int,
) -> dict[int, Form]:
    """Limit of a first-quadrant-style spectral sequence, antidiagonal-wise.

    `totals[m]` is the page-one total on antidiagonal m.  All differentials
    map m -> m+1 and kill equal dimensions on both sides; `flow[m]` is their
    total rank.  The limit must vanish outside [low, high].  Returns forms
    for the surviving totals h_m with the vanishing imposed.
    """
    if not totals:
        return {}
    ms = sorted(totals)
    m_min, m_max = ms[0], ms[-1]

    def maybe_nonzero(m: int) -> bool:
        t = totals.get(m, 0)
        return bool(t.coeffs or t.const) if isinstance(t, Form) else t != 0

    # a differential m -> m+1 can only have rank if both sides can be nonzero
    flows = {
        m: Form.var(system.new_var(0, _UNBOUNDED))
        for m in range(m_min, m_max)
        if maybe_nonzero(m) and maybe_nonzero(m + 1)
    }

    def flow(m: int) -> Form:
        return flows.get(m, Form.of(0))

    out: dict[int, Form] = {}
    for m in range(m_min, m_max + 1):
        t = totals.get(m, 0)
        tf = Form.of(t) if isinstance(t, int) else t
        h = tf - flow(m - 1) - flow(m)
        if low <= m <= high:
            system.add_ge0(h)
            out[m] = h
        else:
            system.add_eq(h)
    return out


def les_chain(
    system: LinearSystem,
    first: list[Form],
    middles: list[list[Form]],
    *,
    top: int,
) -> list[Form]:
    """Chase K_0 = first through 0 -> K_{i-1} -> M_i -> K_i -> 0.

    All objects live on a space of dimension `top`; vectors are indexed by
    degree 0..top.  Returns the forms of the final cokernel K_L.
    """
    degrees = top + 1
    k_prev = list(first)

    def at(vec: list[Form], q: int) -> Form:
        return vec[q] if 0 <= q < len(vec) else Form.of(0)

    for mid in middles:
        xs = [Form.var(system.new_var(0, _UNBOUNDED)) for _ in range(degrees)]
        # H^0(K_{i-1}) -> H^0(M_i) is injective
        system.add_eq(xs[0] - at(k_prev, 0))
        for q in range(degrees):
            system.add_ge0(at(k_prev, q) - xs[q])
            system.add_ge0(at(mid, q) - xs[q])
        k_new = []
        for q in range(degrees):
            x_next = xs[q + 1] if q + 1 < degrees else Form.of(0)
            h = at(mid, q) - xs[q] + at(k_prev, q + 1) - x_next
            system.add_ge0(h)
            k_new.append(h)
        k_prev = k_new
    return k_prev
