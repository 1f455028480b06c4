"""Symbol calculus against the finite-section oracle on a second map.

phi2(z) = -z/(2-z) has contact 1 -> -1 like the reference map but with
derivative -2 there, so s = 1/2: every s-dependent path (embeddings,
composition-sum scaling, spectra, norms, vanishing floors) runs with a
scale on the other side of 1.
"""

import math

import numpy as np
import pytest

from tcalgebra import (
    MoebiusMap,
    boundary_contact,
    compression_eigs,
    essential_norm,
    fill_distance,
    normalize,
    parse,
    to_composition_sum,
    vanishing_sequence,
)

from conftest import random_contact_map


@pytest.fixture
def phi2():
    return MoebiusMap(-1, 0, -1, 2)


@pytest.fixture
def contact2(phi2):
    return boundary_contact(phi2)


def test_contact_data(contact2):
    assert abs(contact2.zeta - 1) < 1e-12
    assert abs(contact2.eta + 1) < 1e-12
    assert abs(contact2.dphi + 2.0) < 1e-12
    assert abs(contact2.s - 0.5) < 1e-12


def test_real_part_interval_scales_with_s(contact2):
    from tcalgebra import essential_spectrum

    pts = essential_spectrum(normalize(parse("C + C'"), contact2), 801)
    root_s = math.sqrt(0.5)
    assert np.max(np.abs(pts.imag)) < 1e-12
    assert abs(pts.real.min() + root_s) < 1e-12
    assert abs(pts.real.max() - root_s) < 1e-12


def test_norm_of_composition_operator(contact2):
    assert abs(essential_norm(normalize(parse("C"), contact2), 801) - math.sqrt(0.5)) < 1e-9


def test_adjoint_identity_floor(phi2):
    # C' = s S modulo compacts with s = 1/2
    vs = vanishing_sequence("C' - 0.5*S", phi2, 512, 64)
    assert float(vs.min()) < 0.02
    assert vs[-1] < vs[0]


def test_composition_sum_scaling(contact2):
    b = normalize(parse("C'*C"), contact2)
    # x*x = s C_{phi.sigma} with s = 1/2; dyadic so the text is exact
    assert to_composition_sum(b) == "(0.5,0.0)*S*C + K"
    back = normalize(parse(to_composition_sum(b)), contact2)
    assert back.equals_exact(b)


def test_anticommutator_fill(phi2):
    eigs = compression_eigs("C'*C + C*C'", phi2, 256)
    assert eigs[0] > -1e-10
    assert fill_distance(np.linspace(0, 0.5, 101), eigs) < 0.05


def test_random_maps_interval_scaling(rng):
    from tcalgebra import essential_spectrum

    for _ in range(5):
        m = random_contact_map(rng)
        contact = boundary_contact(m)
        pts = essential_spectrum(normalize(parse("C + C'"), contact), 501)
        root_s = math.sqrt(contact.s)
        assert np.max(np.abs(pts.imag)) < 1e-9
        assert abs(pts.real.min() + root_s) < 1e-9
        assert abs(pts.real.max() - root_s) < 1e-9
