"""Canonical quintuples and their 2x2 matrix symbols.

Modulo compacts, the unital C*-algebra generated by the shift and the
composition operator of a disk map with boundary contact zeta -> eta
(zeta != eta) consists exactly of elements

    t_w + f(x*x) + g(xx*) + u h(x*x) + u* k(xx*),

where w is continuous on the circle, f, g, h, k vanish at 0 on [0, s]
with s = 1/|phi'(zeta)|, x is the coset of the composition operator and
u its unitary polar factor.  Each such element is identified with the
matrix-valued function on a "figure eight with an interval attached":

    t in (0, s]  ->  [[w(zeta)+g(t), h(t)], [k(t), w(eta)+f(t)]]
    triple point ->  diag(w(zeta), w(eta))
    |lam| = 1    ->  w(lam) I

That identification is an isometric *-isomorphism, so essential spectra,
essential norms and Fredholmness reduce to pointwise 2x2 linear algebra,
which is what this module computes.
"""

from dataclasses import dataclass

import numpy as np

from .moebius import ContactData
from .rings import HalfPolynomial, TrigPolynomial
from .tolerances import TOL, Tolerances


class ContactMismatchError(ValueError):
    """Mixing elements built over different maps is meaningless."""


class NotCentralError(ValueError):
    """Gelfand values exist only for central elements."""


class InvalidContactError(ValueError):
    """The quotient calculus needs distinct boundary points zeta != eta."""


@dataclass(frozen=True)
class LambdaPoint:
    """Point of the symbol space: circle point, triple point, or interval t."""

    kind: str  # "circle" | "triple" | "interval"
    value: complex | float | None = None

    @staticmethod
    def circle(lam: complex) -> "LambdaPoint":
        if abs(abs(lam) - 1) > 1e-9:
            raise ValueError("circle points must be unimodular")
        return LambdaPoint("circle", complex(lam))

    @staticmethod
    def interval(t: float) -> "LambdaPoint":
        if t <= 0:
            raise ValueError("interval points have 0 < t <= s")
        return LambdaPoint("interval", float(t))


TRIPLE_POINT = LambdaPoint("triple", None)


def _check_contact(contact: ContactData) -> ContactData:
    if abs(contact.zeta - contact.eta) <= 1e-9:
        raise InvalidContactError(
            "contact point equals its image; the two-point calculus needs zeta != eta"
        )
    return contact


class SymbolElement:
    """Canonical quintuple (w; f, g, h, k) over fixed contact data."""

    __slots__ = ("w", "f", "g", "h", "k", "contact")

    def __init__(
        self,
        w: TrigPolynomial,
        f: HalfPolynomial,
        g: HalfPolynomial,
        h: HalfPolynomial,
        k: HalfPolynomial,
        contact: ContactData,
    ):
        self.w = w
        self.f = f
        self.g = g
        self.h = h
        self.k = k
        self.contact = _check_contact(contact)

    @property
    def s(self) -> float:
        return self.contact.s

    def _same_algebra(self, other: "SymbolElement") -> None:
        if self.contact != other.contact:
            raise ContactMismatchError("operands live over different contact data")

    def __add__(self, other: "SymbolElement") -> "SymbolElement":
        self._same_algebra(other)
        return SymbolElement(
            self.w + other.w,
            self.f + other.f,
            self.g + other.g,
            self.h + other.h,
            self.k + other.k,
            self.contact,
        )

    def __sub__(self, other: "SymbolElement") -> "SymbolElement":
        return self + (-1) * other

    def __rmul__(self, scalar: complex) -> "SymbolElement":
        return SymbolElement(
            scalar * self.w,
            scalar * self.f,
            scalar * self.g,
            scalar * self.h,
            scalar * self.k,
            self.contact,
        )

    def __neg__(self) -> "SymbolElement":
        return (-1) * self

    def __mul__(self, other: "SymbolElement") -> "SymbolElement":
        """Product in the quotient algebra.

        The cross terms follow from u f(x*x) = f(xx*) u, x^2 = (x*)^2 = 0,
        f(x*x) g(xx*) = 0 and t_w x = w(zeta) x, x t_w = w(eta) x.
        """
        self._same_algebra(other)
        w1z = self.w(self.contact.zeta)
        w1e = self.w(self.contact.eta)
        w2z = other.w(other.contact.zeta)
        w2e = other.w(other.contact.eta)
        f1, g1, h1, k1 = self.f, self.g, self.h, self.k
        f2, g2, h2, k2 = other.f, other.g, other.h, other.k
        return SymbolElement(
            self.w * other.w,
            w1e * f2 + w2e * f1 + f1 * f2 + k1 * h2,
            w1z * g2 + w2z * g1 + g1 * g2 + h1 * k2,
            w1z * h2 + w2e * h1 + g1 * h2 + h1 * f2,
            w1e * k2 + w2z * k1 + k1 * g2 + f1 * k2,
            self.contact,
        )

    def adjoint(self) -> "SymbolElement":
        """Conjugate every slot; the two off-diagonal slots trade places."""
        return SymbolElement(
            self.w.conj(),
            self.f.conj(),
            self.g.conj(),
            self.k.conj(),
            self.h.conj(),
            self.contact,
        )

    def is_zero(self, tol: float = 0.0) -> bool:
        return (
            self.w.is_zero(tol)
            and self.f.is_zero(tol)
            and self.g.is_zero(tol)
            and self.h.is_zero(tol)
            and self.k.is_zero(tol)
        )

    def equals_exact(self, other: "SymbolElement") -> bool:
        return (
            self.contact == other.contact
            and self.w.equals_exact(other.w)
            and self.f.equals_exact(other.f)
            and self.g.equals_exact(other.g)
            and self.h.equals_exact(other.h)
            and self.k.equals_exact(other.k)
        )

    def allclose(self, other: "SymbolElement", tol: float = 1e-10) -> bool:
        return (
            self.contact == other.contact
            and self.w.allclose(other.w, tol)
            and self.f.allclose(other.f, tol)
            and self.g.allclose(other.g, tol)
            and self.h.allclose(other.h, tol)
            and self.k.allclose(other.k, tol)
        )

    def to_json_dict(self) -> dict:
        def half(hp: HalfPolynomial) -> dict:
            return {
                "p": [[c.real, c.imag] for c in hp.p],
                "q": [[c.real, c.imag] for c in hp.q],
            }

        return {
            "w": [[n, c.real, c.imag] for n, c in self.w.items()],
            "f": half(self.f),
            "g": half(self.g),
            "h": half(self.h),
            "k": half(self.k),
            "s": self.contact.s,
            "zeta": [self.contact.zeta.real, self.contact.zeta.imag],
            "eta": [self.contact.eta.real, self.contact.eta.imag],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "SymbolElement":
        def half(d: dict) -> HalfPolynomial:
            return HalfPolynomial(
                [complex(re, im) for re, im in d["p"]],
                [complex(re, im) for re, im in d["q"]],
            )

        zeta = complex(*data["zeta"])
        eta = complex(*data["eta"])
        s = float(data["s"])
        # The derivative at the contact point obeys phi'(zeta) = |phi'(zeta)| eta/zeta,
        # so its phase is recoverable from (s, zeta, eta).
        contact = ContactData(zeta=zeta, eta=eta, dphi=eta / (s * zeta), s=s)
        w = TrigPolynomial({int(n): complex(re, im) for n, re, im in data["w"]})
        return SymbolElement(
            w, half(data["f"]), half(data["g"]), half(data["h"]), half(data["k"]), contact
        )

    def __repr__(self):
        return (
            f"SymbolElement(w={self.w!r}, f={self.f!r}, g={self.g!r}, "
            f"h={self.h!r}, k={self.k!r}, s={self.s!r})"
        )


def zero_element(contact: ContactData) -> SymbolElement:
    z = HalfPolynomial.zero()
    return SymbolElement(TrigPolynomial.zero(), z, z, z, z, contact)


def identity_element(contact: ContactData) -> SymbolElement:
    return embed_toeplitz(TrigPolynomial.constant(1.0), contact)


def embed_toeplitz(w: TrigPolynomial, contact: ContactData) -> SymbolElement:
    """Coset of the Toeplitz operator with (trig-polynomial) symbol w."""
    z = HalfPolynomial.zero()
    return SymbolElement(w, z, z, z, z, contact)


def embed_cphi(contact: ContactData) -> SymbolElement:
    """Coset of the composition operator itself: x = u sqrt(x*x)."""
    z = HalfPolynomial.zero()
    return SymbolElement(
        TrigPolynomial.zero(), z, z, HalfPolynomial.sqrt_t(), z, contact
    )


def embed_csigma(contact: ContactData) -> SymbolElement:
    """Coset of the Krein-adjoint composition operator: x* / s."""
    z = HalfPolynomial.zero()
    return SymbolElement(
        TrigPolynomial.zero(), z, z, z, HalfPolynomial.sqrt_t(1.0 / contact.s), contact
    )


def phi_lambda(b: SymbolElement, lam: LambdaPoint) -> np.ndarray:
    """Evaluate the 2x2 matrix symbol of b at a point of the symbol space."""
    wz = b.w(b.contact.zeta)
    we = b.w(b.contact.eta)
    if lam.kind == "interval":
        t = float(lam.value)
        if t > b.s + 1e-12:
            raise ValueError(f"interval point {t} exceeds s = {b.s}")
        return np.array(
            [[wz + b.g(t), b.h(t)], [b.k(t), we + b.f(t)]], dtype=complex
        )
    if lam.kind == "triple":
        return np.array([[wz, 0], [0, we]], dtype=complex)
    if lam.kind == "circle":
        lamv = complex(lam.value)
        if abs(lamv - b.contact.zeta) <= 1e-12 or abs(lamv - b.contact.eta) <= 1e-12:
            raise ValueError("circle points exclude zeta and eta; use the triple point")
        return b.w(lamv) * np.eye(2, dtype=complex)
    raise ValueError(f"unknown point kind {lam.kind!r}")


def operator_norm(mat: np.ndarray) -> float:
    """Largest singular value of a 2x2 matrix."""
    return float(np.linalg.norm(mat, 2))


# ---------------------------------------------------------------------------
# grids and pointwise data


def _circle_grid(contact: ContactData, resolution: int) -> np.ndarray:
    """Deterministic unimodular grid that contains zeta and eta exactly."""
    theta = np.linspace(0.0, 2 * np.pi, resolution, endpoint=False)
    pts = np.concatenate([np.exp(1j * theta), [contact.zeta, contact.eta]])
    order = np.argsort(np.angle(pts), kind="stable")
    return pts[order]


def _interval_grid(s: float, resolution: int) -> np.ndarray:
    return np.linspace(0.0, s, resolution)


class _Tables:
    """Pointwise values of a quintuple on the computation grids."""

    __slots__ = ("circle", "circle_w", "wz", "we", "ts", "f", "g", "h", "k", "refinable", "element")

    def __init__(self, circle, circle_w, wz, we, ts, f, g, h, k, refinable, element):
        self.circle = circle
        self.circle_w = circle_w
        self.wz = wz
        self.we = we
        self.ts = ts
        self.f = f
        self.g = g
        self.h = h
        self.k = k
        self.refinable = refinable
        self.element = element


@dataclass(frozen=True)
class SampledElement:
    """Value tables standing in for a quintuple with general continuous parts.

    circle_values holds w on the uniform circle grid of matching length;
    f, g, h, k hold values on the uniform grid over [0, s].  Only the
    grid-sweep operations (essential_spectrum, essential_norm, is_fredholm)
    accept this form; exact arithmetic needs the polynomial representation.
    """

    circle_values: np.ndarray
    w_zeta: complex
    w_eta: complex
    f: np.ndarray
    g: np.ndarray
    h: np.ndarray
    k: np.ndarray
    s: float

    @property
    def resolution(self) -> int:
        return len(self.f)


def _tables(b, resolution: int) -> _Tables:
    if isinstance(b, SymbolElement):
        circle = _circle_grid(b.contact, resolution)
        ts = _interval_grid(b.s, resolution)
        return _Tables(
            circle,
            b.w(circle),
            b.w(b.contact.zeta),
            b.w(b.contact.eta),
            ts,
            b.f(ts),
            b.g(ts),
            b.h(ts),
            b.k(ts),
            True,
            b,
        )
    if isinstance(b, SampledElement):
        for name in ("g", "h", "k"):
            if len(getattr(b, name)) != b.resolution:
                raise ValueError("sampled tables must share one grid length")
        if len(b.circle_values) != b.resolution:
            raise ValueError("sampled circle table must match the grid length")
        if resolution != b.resolution:
            raise ValueError(
                f"sampled element carries its own resolution {b.resolution}, got {resolution}"
            )
        theta = np.linspace(0.0, 2 * np.pi, resolution, endpoint=False)
        return _Tables(
            np.exp(1j * theta),
            np.asarray(b.circle_values, dtype=complex),
            complex(b.w_zeta),
            complex(b.w_eta),
            _interval_grid(b.s, resolution),
            np.asarray(b.f, dtype=complex),
            np.asarray(b.g, dtype=complex),
            np.asarray(b.h, dtype=complex),
            np.asarray(b.k, dtype=complex),
            False,
            b,
        )
    raise TypeError(f"expected SymbolElement or SampledElement, got {type(b)!r}")


def _branch_eigenvalues(tab: _Tables) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues of the interval matrices: mean +- sqrt(disc)/2.

    Both square-root signs are returned so no branch choice can drop points.
    """
    diag_sum = tab.f + tab.we + tab.g + tab.wz
    diag_diff = tab.f + tab.we - tab.g - tab.wz
    disc = diag_diff.astype(complex) ** 2 + 4 * tab.h * tab.k
    root = np.sqrt(disc)
    return (diag_sum + root) / 2.0, (diag_sum - root) / 2.0


def spectrum_samples(b, resolution: int = 1000) -> list[tuple[complex, str]]:
    """Essential-spectrum point cloud with provenance labels.

    Labels are "circle" for w values on the circle grid and "interval+" /
    "interval-" for the two eigenvalue branches over the [0, s] grid.
    """
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    tab = _tables(b, resolution)
    plus, minus = _branch_eigenvalues(tab)
    rows: list[tuple[complex, str]] = []
    rows.extend((complex(v), "circle") for v in tab.circle_w)
    rows.extend((complex(v), "interval+") for v in plus)
    rows.extend((complex(v), "interval-") for v in minus)
    return rows


def essential_spectrum(b, resolution: int = 1000) -> np.ndarray:
    """Point cloud filling the essential spectrum.

    The set is the union of the circle values of w with the eigenvalue
    image of the interval matrices over a deterministic grid on [0, s]
    that includes both endpoints.
    """
    return np.array([z for z, _ in spectrum_samples(b, resolution)], dtype=complex)


# ---------------------------------------------------------------------------
# sup / inf sweeps with local refinement


def _interval_norms(b: SymbolElement, ts: np.ndarray) -> np.ndarray:
    wz = b.w(b.contact.zeta)
    we = b.w(b.contact.eta)
    m11 = wz + b.g(ts)
    m22 = we + b.f(ts)
    m12 = b.h(ts)
    m21 = b.k(ts)
    return _norms_from_entries(m11, m12, m21, m22)


def _norms_from_entries(m11, m12, m21, m22) -> np.ndarray:
    frob2 = abs(m11) ** 2 + abs(m12) ** 2 + abs(m21) ** 2 + abs(m22) ** 2
    det = np.abs(m11 * m22 - m12 * m21)
    gap = np.sqrt(np.maximum(frob2**2 - 4 * det**2, 0.0))
    return np.sqrt((frob2 + gap) / 2.0)


def _dets_from_tables(tab: _Tables, ts=None) -> np.ndarray:
    if ts is None:
        m11 = tab.wz + tab.g
        m22 = tab.we + tab.f
        m12, m21 = tab.h, tab.k
    else:
        b = tab.element
        m11 = tab.wz + b.g(ts)
        m22 = tab.we + b.f(ts)
        m12, m21 = b.h(ts), b.k(ts)
    return np.abs(m11 * m22 - m12 * m21)


@dataclass(frozen=True)
class NormReport:
    """Essential norm with the accuracy of the final refinement grid."""

    value: float
    where: str  # "circle" | "interval"
    at: float  # angle on the circle, or t on the interval
    grid_spacing: float
    derivative_bound: float

    @property
    def accuracy(self) -> float:
        return self.grid_spacing * self.derivative_bound


def _refine(values_fn, x0: float, lo: float, hi: float, spacing: float, resolution: int, rounds: int = 3):
    """Three rounds of local grid refinement around a running extremizer."""
    best_x, best_v = x0, None
    for _ in range(rounds):
        a = max(lo, best_x - spacing)
        bnd = min(hi, best_x + spacing)
        xs = np.linspace(a, bnd, resolution)
        vals = values_fn(xs)
        i = int(np.argmax(vals))
        best_x, best_v = float(xs[i]), float(vals[i])
        spacing = xs[1] - xs[0] if len(xs) > 1 else spacing
    # crude derivative bound from the final fine grid
    if len(xs) > 1:
        dbound = float(np.max(np.abs(np.diff(vals)))) / (xs[1] - xs[0])
    else:
        dbound = 0.0
    return best_v, best_x, float(spacing), dbound


def essential_norm_report(b, resolution: int = 1000) -> NormReport:
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    tab = _tables(b, resolution)

    circle_vals = np.abs(tab.circle_w)
    ic = int(np.argmax(circle_vals))
    circle_best = float(circle_vals[ic])
    circle_angle = float(np.angle(tab.circle[ic]) % (2 * np.pi))

    interval_vals = _norms_from_entries(tab.wz + tab.g, tab.h, tab.k, tab.we + tab.f)
    it = int(np.argmax(interval_vals))
    interval_best = float(interval_vals[it])
    interval_t = float(tab.ts[it])

    if not tab.refinable:
        spacing = tab.ts[1] - tab.ts[0] if len(tab.ts) > 1 else 0.0
        if circle_best >= interval_best:
            return NormReport(circle_best, "circle", circle_angle, 2 * np.pi / resolution, 0.0)
        return NormReport(interval_best, "interval", interval_t, float(spacing), 0.0)

    elem: SymbolElement = tab.element
    circle_spacing = 2 * np.pi / resolution
    cv, ca, cs, cd = _refine(
        lambda th: np.abs(elem.w(np.exp(1j * th))),
        circle_angle,
        circle_angle - circle_spacing,
        circle_angle + circle_spacing,
        circle_spacing,
        resolution,
    )
    circle_best = max(circle_best, cv)

    t_spacing = tab.ts[1] - tab.ts[0]
    iv, ia, isp, idb = _refine(
        lambda ts: _interval_norms(elem, ts),
        interval_t,
        0.0,
        elem.s,
        float(t_spacing),
        resolution,
    )
    interval_best = max(interval_best, iv)

    if circle_best >= interval_best:
        return NormReport(circle_best, "circle", ca % (2 * np.pi), cs, cd)
    return NormReport(interval_best, "interval", ia, isp, idb)


def essential_norm(b, resolution: int = 1000) -> float:
    """Sup of the pointwise 2x2 operator norms over the symbol space."""
    return essential_norm_report(b, resolution).value


def is_fredholm(b, resolution: int = 1000, tol: Tolerances = TOL) -> bool:
    """Invertibility of the symbol: w stays away from 0 on the circle and
    the interval matrices stay away from singularity (0 outside the
    essential spectrum, up to the threshold)."""
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    tab = _tables(b, resolution)

    circle_min = float(np.min(np.abs(tab.circle_w)))
    dets = _dets_from_tables(tab)
    idx = int(np.argmin(dets))
    det_min = float(dets[idx])

    if tab.refinable:
        elem: SymbolElement = tab.element
        circle_vals = np.abs(tab.circle_w)
        ic = int(np.argmin(circle_vals))
        angle = float(np.angle(tab.circle[ic]) % (2 * np.pi))
        spacing = 2 * np.pi / resolution
        neg_min, _, _, _ = _refine(
            lambda th: -np.abs(elem.w(np.exp(1j * th))),
            angle,
            angle - spacing,
            angle + spacing,
            spacing,
            resolution,
        )
        circle_min = min(circle_min, -neg_min)

        t0 = float(tab.ts[idx])
        t_spacing = float(tab.ts[1] - tab.ts[0])
        neg_min, _, _, _ = _refine(
            lambda ts: -_dets_from_tables(tab, ts), t0, 0.0, elem.s, t_spacing, resolution
        )
        det_min = min(det_min, -neg_min)

    return circle_min > tol.fredholm and det_min > tol.fredholm


# ---------------------------------------------------------------------------
# the center


def is_central(b: SymbolElement, tol: Tolerances = TOL) -> bool:
    """Central elements: no off-diagonal part, f = g, and w(zeta) = w(eta)."""
    eps = tol.coefficient
    return (
        b.h.is_zero(eps)
        and b.k.is_zero(eps)
        and (b.f - b.g).is_zero(eps)
        and abs(b.w(b.contact.zeta) - b.w(b.contact.eta)) <= eps
    )


def gelfand_value(b: SymbolElement, lam: LambdaPoint, tol: Tolerances = TOL) -> complex:
    """Gelfand transform of a central element at a point of the symbol space.

    w extends to the interval by its common boundary value w(zeta) = w(eta);
    f extends to the circle by zero.
    """
    if not is_central(b, tol):
        raise NotCentralError("element is not in the center")
    if lam.kind == "circle":
        return b.w(complex(lam.value))
    if lam.kind == "triple":
        return b.w(b.contact.zeta)
    return b.w(b.contact.zeta) + b.f(float(lam.value))
