import numpy as np
import pytest

from tcalgebra import MoebiusMap, boundary_contact


@pytest.fixture
def phi0() -> MoebiusMap:
    """Reference map -(1+z)/2 with contact 1 -> -1 and s = 2."""
    return MoebiusMap(-1, -1, 0, 2)


@pytest.fixture
def sigma0(phi0) -> MoebiusMap:
    return phi0.krein_adjoint


@pytest.fixture
def rho0() -> MoebiusMap:
    """(1+z)/2, fixing the contact point 1."""
    return MoebiusMap(1, 1, 0, 2)


@pytest.fixture
def contact0(phi0):
    contact = boundary_contact(phi0)
    assert contact is not None
    return contact


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260809)


def psi_t(t: float) -> MoebiusMap:
    """Canonical positive parabolic map fixing 1 with translation t."""
    return MoebiusMap(2 - t, t, -t, 2 + t)


def random_contact_map(rng: np.random.Generator) -> MoebiusMap:
    """Random non-automorphism self-map with boundary contact zeta != eta.

    Built by conjugating a right-half-plane contraction w -> lam*w/(1+mu*w)
    (lam > 0, Re mu > 0, touching the boundary only at w = 0) through the
    Cayley transform, then rotating domain and range independently.
    """
    lam = float(np.exp(rng.uniform(-1.0, 1.0)))
    mu = complex(0.2 + abs(rng.standard_normal()), rng.standard_normal())
    cayley = MoebiusMap(-1, 1, 1, 1)  # z -> (1-z)/(1+z), self-inverse
    v = MoebiusMap(lam, 0, mu, 1)
    psi = cayley.compose(v).compose(cayley)
    u = np.exp(1j * rng.uniform(0, 2 * np.pi))
    w = np.exp(1j * rng.uniform(0, 2 * np.pi))
    return rotation_map(u).compose(psi).compose(rotation_map(w))


def rotation_map(alpha: complex) -> MoebiusMap:
    return MoebiusMap(alpha, 0, 0, 1)
