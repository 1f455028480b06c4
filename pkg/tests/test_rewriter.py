import numpy as np
import pytest

from tcalgebra import (
    ExpressionSyntaxError,
    HalfPolynomial,
    NotInGeneratorRingError,
    SymbolElement,
    TrigPolynomial,
    composition_sum_pretty,
    embed_cphi,
    normalize,
    parse,
    render,
    to_composition_sum,
    zero_element,
)
from tcalgebra.rewriter import (
    Adjoint,
    CPhi,
    CSigma,
    CompactTerm,
    Identity,
    Product,
    Scalar,
    Sum,
    Toeplitz,
)


class TestParse:
    def test_adjoint_product(self):
        assert parse("C' * C") == Product((Adjoint(CPhi()), CPhi()))

    def test_sum_of_three(self):
        ast = parse("T{z} + C + C'")
        assert isinstance(ast, Sum)
        assert len(ast.terms) == 3
        assert isinstance(ast.terms[0], Toeplitz)
        assert ast.terms[0].symbol.coefficient(1) == 1.0
        assert ast.terms[1] == CPhi()
        assert ast.terms[2] == Adjoint(CPhi())

    def test_scalar_folding(self):
        ast = parse("2*(C*S - S*C)")
        expected = Scalar(
            complex(2),
            Sum((Product((CPhi(), CSigma())), Scalar(complex(-1), Product((CSigma(), CPhi()))))),
        )
        assert ast == expected

    def test_complex_literal(self):
        ast = parse("(1.5,-2)*C")
        assert ast == Scalar(complex(1.5, -2.0), CPhi())

    def test_bare_number(self):
        assert parse("2") == Scalar(complex(2), Identity())

    def test_identity_and_compact(self):
        assert parse("I") == Identity()
        assert parse("K") == CompactTerm()

    def test_parenthesized_expression(self):
        assert parse("(C)") == CPhi()

    def test_double_adjoint(self):
        assert parse("C''") == Adjoint(Adjoint(CPhi()))

    def test_whitespace_insensitive(self):
        assert parse(" C '  *  C ") == parse("C'*C")

    def test_trig_payload(self):
        ast = parse("T{2z^2 - z^-1 + (0,1)}")
        w = ast.symbol
        assert w.coefficient(2) == 2.0
        assert w.coefficient(-1) == -1.0
        assert w.coefficient(0) == 1j

    def test_trig_coefficient_with_star(self):
        assert parse("T{2*z}").symbol.coefficient(1) == 2.0

    def test_error_position_and_expected(self):
        with pytest.raises(ExpressionSyntaxError) as info:
            parse("C + ")
        assert info.value.position == 4
        assert info.value.expected

    def test_trailing_input_is_an_error(self):
        with pytest.raises(ExpressionSyntaxError) as info:
            parse("2C")
        assert info.value.position == 1

    def test_unbalanced_brace(self):
        with pytest.raises(ExpressionSyntaxError):
            parse("T{z")

    def test_offset_is_zero_based(self):
        with pytest.raises(ExpressionSyntaxError) as info:
            parse("?")
        assert info.value.position == 0
        assert "offset 0" in str(info.value)


class TestNormalize:
    def test_cphi_squared_vanishes(self, contact0):
        assert normalize(parse("C*C"), contact0).is_zero()

    def test_adjoint_cphi_times_cphi(self, contact0):
        b = normalize(parse("C'*C"), contact0)
        assert np.array_equal(b.f.p, np.array([0, 1.0], dtype=complex))
        twice = normalize(parse("2*S*C"), contact0)
        assert b.equals_exact(twice)

    def test_adjoint_is_s_times_krein(self, contact0):
        left = normalize(parse("C'"), contact0)
        right = contact0.s * normalize(parse("S"), contact0)
        assert left.allclose(right, 1e-15)

    def test_shift_commutator(self, contact0):
        b = normalize(parse("T{z}*C - C*T{z}"), contact0)
        # (zeta - eta) sqrt(t) = 2 sqrt(t)
        assert np.array_equal(b.h.q, np.array([2.0], dtype=complex))
        assert b.f.is_zero() and b.g.is_zero() and b.k.is_zero()

    def test_compact_dropped(self, contact0):
        assert normalize(parse("K"), contact0).is_zero()
        assert normalize(parse("C + K"), contact0).allclose(
            normalize(parse("C"), contact0), 0.0
        )

    def test_linearity(self, contact0):
        e1, e2 = parse("T{z}*C"), parse("S'*S")
        joint = normalize(parse("T{z}*C + S'*S"), contact0)
        split = normalize(e1, contact0) + normalize(e2, contact0)
        assert joint.allclose(split, 1e-15)

    def test_multiplicativity(self, contact0):
        e1, e2 = "C + T{z}", "S - C'"
        joint = normalize(parse(f"({e1})*({e2})"), contact0)
        split = normalize(parse(e1), contact0) * normalize(parse(e2), contact0)
        assert joint.allclose(split, 1e-14)

    def test_star_compatibility(self, contact0):
        e = "T{z}*C - 2*S"
        assert normalize(parse(f"({e})'"), contact0).allclose(
            normalize(parse(e), contact0).adjoint(), 1e-15
        )


class TestUniqueness:
    def test_equal_quintuples_equal_symbols(self, contact0, rng):
        from tcalgebra import phi_lambda, LambdaPoint

        b1 = normalize(parse("C'*C"), contact0)
        b2 = normalize(parse("2*S*C"), contact0)
        assert b1.equals_exact(b2)
        for _ in range(10):
            lam = LambdaPoint.interval(rng.uniform(1e-6, contact0.s))
            assert np.array_equal(phi_lambda(b1, lam), phi_lambda(b2, lam))

    def test_zero_quintuple_zero_matrix_everywhere(self, contact0, rng):
        from tcalgebra import phi_lambda, LambdaPoint, TRIPLE_POINT

        b = normalize(parse("C*C"), contact0)
        assert b.is_zero()
        points = [TRIPLE_POINT, LambdaPoint.circle(np.exp(0.3j))]
        points += [LambdaPoint.interval(rng.uniform(1e-6, contact0.s)) for _ in range(5)]
        for lam in points:
            assert np.max(np.abs(phi_lambda(b, lam))) == 0.0


class TestRender:
    def test_quintuple_lines(self, contact0):
        text = render(normalize(parse("C'*C"), contact0))
        assert "f: t" in text
        assert "s: 2" in text

    def test_zero(self, contact0):
        text = render(zero_element(contact0))
        assert "w: 0" in text


class TestCompositionSum:
    def test_xstarx_is_scaled_iterate(self, contact0):
        b = normalize(parse("C'*C"), contact0)
        assert to_composition_sum(b) == "(2.0,0.0)*S*C + K"
        assert composition_sum_pretty(b) == "2·C_{φ∘σ} + K"

    def test_cphi(self, contact0):
        b = embed_cphi(contact0)
        assert to_composition_sum(b) == "(1.0,0.0)*C + K"
        assert composition_sum_pretty(b) == "C_φ + K"

    def test_zero_element(self, contact0):
        assert to_composition_sum(zero_element(contact0)) == "0 + K"

    def test_toeplitz_part(self, contact0):
        b = normalize(parse("T{z}"), contact0)
        assert to_composition_sum(b) == "T{(1.0,0.0)*z} + K"
        assert composition_sum_pretty(b) == "T{z} + K"

    def test_not_in_generator_ring(self, contact0):
        bad = SymbolElement(
            TrigPolynomial.zero(),
            HalfPolynomial((), (1.0,)),  # sqrt(t) in the f slot
            HalfPolynomial.zero(),
            HalfPolynomial.zero(),
            HalfPolynomial.zero(),
            contact0,
        )
        with pytest.raises(NotInGeneratorRingError):
            to_composition_sum(bad)

    def test_round_trip_mixed(self, contact0, rng):
        for _ in range(25):
            w = TrigPolynomial({int(n): complex(c, c / 2) for n, c in
                                zip(rng.integers(-3, 4, 3), rng.standard_normal(3))})
            b = SymbolElement(
                w,
                HalfPolynomial(np.concatenate([[0], rng.standard_normal(2)]), ()),
                HalfPolynomial(np.concatenate([[0], rng.standard_normal(2)]), ()),
                HalfPolynomial((), rng.standard_normal(2)),
                HalfPolynomial((), rng.standard_normal(2)),
                contact0,
            )
            back = normalize(parse(to_composition_sum(b)), contact0)
            assert back.equals_exact(b)

    def test_linear_independence_of_generator_slots(self, contact0):
        # words from the four iterate families land in disjoint monomial slots
        seen = set()
        for n in (1, 2, 3):
            b = normalize(parse("S*C" + "*S*C" * (n - 1)), contact0)
            key = ("f", len(b.f.p) - 1)
            assert not b.f.is_zero() and key not in seen
            seen.add(key)
            b = normalize(parse("C*S" + "*C*S" * (n - 1)), contact0)
            key = ("g", len(b.g.p) - 1)
            assert not b.g.is_zero() and key not in seen
            seen.add(key)
        for n in (0, 1, 2):
            b = normalize(parse("C" + "*S*C" * n), contact0)
            key = ("h", len(b.h.q) - 1)
            assert not b.h.is_zero() and key not in seen
            seen.add(key)
            b = normalize(parse("S" + "*C*S" * n), contact0)
            key = ("k", len(b.k.q) - 1)
            assert not b.k.is_zero() and key not in seen
            seen.add(key)
        assert len(seen) == 12
