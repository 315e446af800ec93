import pytest
from hypothesis import given
from hypothesis import strategies as st

from hennings.files import AlgebraLoadError, algebra_from_dict, algebra_to_dict, load_algebra, save_algebra, validate
from hennings.hopf import (
    NotInvertible,
    TensorElement,
    check_hopf_axioms,
    check_quasitriangular,
    check_ribbon,
    drinfeld_u,
    ribbon_element,
)

from conftest import ALGEBRAS


def corrupted(H, edit):
    doc = algebra_to_dict(H)
    edit(doc)
    return algebra_from_dict(doc)


@pytest.mark.parametrize("checker", [check_hopf_axioms, check_quasitriangular, check_ribbon])
def test_shipped_algebras_certify(algebra, checker):
    H, _ = algebra
    rep = checker(H)
    assert rep.ok, rep.lines()


def test_group_law(zn2):
    g = zn2.e("g")
    assert g * g == zn2.e("1")


def test_antipode_fixes_unit(algebra):
    H, _ = algebra
    assert H.s(H.one) == H.one


def test_grouplike_coproduct(zn2):
    g = zn2.e("g")
    assert g.coproduct() == TensorElement.pure(zn2, g.coeffs, g.coeffs)


def test_swapped_antipode_fails(zn2):
    def swap(doc):
        doc["antipode"] = [[0, 1, "1"], [1, 0, "1"]]

    # s(1) = g breaks the antipode identity
    rep = check_hopf_axioms(corrupted(zn2, swap))
    assert not rep.ok
    assert "antipode_left" in rep.failed()


def test_perturbed_rho_fails(sweedler):
    def bump(doc):
        doc["rho"][0][2] = "1"

    rep = check_quasitriangular(corrupted(sweedler, bump))
    assert "intertwines_coproduct" in rep.failed()


def test_scaled_trivial_rho_fails(zn2):
    def scale(doc):
        doc["rho"] = [[0, 0, "2"]]

    rep = check_quasitriangular(corrupted(zn2, scale))
    assert {"coproduct_first_leg", "coproduct_second_leg"} <= set(rep.failed())


def test_non_grouplike_G_fails(sweedler):
    def bad_g(doc):
        doc["G"] = ["1", "1", "0", "0"]

    rep = check_ribbon(corrupted(sweedler, bad_g))
    assert "G_grouplike" in rep.failed()


def test_trivial_rho_gives_trivial_ribbon(zn2):
    assert drinfeld_u(zn2) == zn2.one
    assert ribbon_element(zn2) == zn2.one


def test_drinfeld_u_implements_s2(uq):
    u = drinfeld_u(uq)
    uinv = uq.inverse(u)
    for i in range(uq.dim):
        x = uq.basis_vec(i)
        assert uq.s(x, 2) == uq.mult_many(u, x, uinv)


def test_nilpotent_not_invertible(uq):
    with pytest.raises(NotInvertible):
        uq.inverse(uq.e("E").coeffs)


def test_load_rejects_corrupt_file(tmp_path, zn2):
    doc_H = corrupted(zn2, lambda d: d.update(antipode=[[0, 1, "1"], [1, 0, "1"]]))
    path = tmp_path / "bad.json"
    save_algebra(doc_H, path)
    with pytest.raises(AlgebraLoadError) as err:
        load_algebra(path)
    assert "antipode" in str(err.value)
    assert load_algebra(path, force=True).dim == 2


def test_save_load_round_trip(tmp_path, uq):
    path = tmp_path / "uq.json"
    save_algebra(uq, path)
    again = load_algebra(path)
    assert algebra_to_dict(again) == algebra_to_dict(uq)
    assert all(r.ok for r in validate(again))


def test_bad_header(tmp_path):
    path = tmp_path / "x.json"
    path.write_text('{"basis": ["1"]}')
    with pytest.raises(AlgebraLoadError):
        load_algebra(path)


coeff = st.integers(min_value=-2, max_value=2)


def vectors(H):
    return st.lists(coeff, min_size=H.dim, max_size=H.dim).map(lambda c: tuple(H.scalar(x) for x in c))


@pytest.mark.parametrize("name", ["uq_sl2_i", "sweedler"])
@given(data=st.data())
def test_structure_maps_on_random_elements(name, data):
    from hennings.files import shipped_algebra

    H = shipped_algebra(name)
    x = data.draw(vectors(H))
    y = data.draw(vectors(H))
    xy = H.mult(x, y)
    # antipode reverses products, coproduct and counit preserve them
    assert H.s(xy) == H.mult(H.s(y), H.s(x))
    assert H.coproduct(xy) == H.coproduct(x) * H.coproduct(y)
    assert H.counit_of(xy) == H.counit_of(x) * H.counit_of(y)
    assert H.s(H.s(x, 3), -3) == x
