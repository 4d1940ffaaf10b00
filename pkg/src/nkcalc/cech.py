"""The Cech complex A -> B -> B (x)_A B of a graded ring extension, degree by degree.

B (x)_A B is presented in doubled variables: two copies of B's relations plus
phi(a)(first copy) = phi(a)(second copy) for every generator a of A.  In
each degree d the report records whether A_d -> B_d is injective and whether
its image is the equalizer ker(b -> b(x)1 - 1(x)b).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import FinitelyPresentedAlgebra
from .linalg import Echelon, image_and_kernel, rank
from .parsing import parse_polynomial
from .polynomials import Polynomial


class NotModuleFinite(ValueError):
    pass


def _embed(p: Polynomial, nvars: int, offset: int) -> Polynomial:
    terms = {}
    for e, c in p.terms.items():
        f = [0] * nvars
        f[offset: offset + len(e)] = e
        terms[tuple(f)] = c
    return Polynomial(nvars, terms, p.field)


def _substitute(p: Polynomial, images: list, target_nvars: int, field) -> Polynomial:
    out = Polynomial(target_nvars, {}, field)
    for e, c in p.terms.items():
        term = Polynomial.constant(target_nvars, c, field)
        for k, a in enumerate(e):
            if a:
                term = term * images[k] ** a
        out = out + term
    return out


def tensor_square(A: FinitelyPresentedAlgebra, B: FinitelyPresentedAlgebra, images: list) -> FinitelyPresentedAlgebra:
    n = B.nvars
    N = 2 * n
    rels = [_embed(g, N, 0) for g in B.generators] + [_embed(g, N, n) for g in B.generators]
    for img in images:
        rels.append(_embed(img, N, 0) - _embed(img, N, n))
    names = [f"{v}_1" for v in B.names] + [f"{v}_2" for v in B.names]
    weights = list(B.weights) * 2
    return FinitelyPresentedAlgebra(names, rels, weights, field=B.field, label=f"B (x)_A B")


@dataclass
class CechDegree:
    degree: int
    dim_A: int
    dim_B: int
    dim_BB: int
    dim_equalizer: int
    rank_phi: int

    @property
    def injective(self) -> bool:
        return self.rank_phi == self.dim_A

    @property
    def exact(self) -> bool:
        return self.injective and self.rank_phi == self.dim_equalizer


@dataclass
class CechReport:
    degrees: list
    traverso_witnesses: list  # (degree, element of B) with b^2, b^3 in A but b not in A
    module_finite: bool = True
    notes: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return all(d.exact for d in self.degrees)

    def failures(self) -> list:
        out = []
        for d in self.degrees:
            if not d.injective:
                out.append((d.degree, 0))
            elif not d.exact:
                out.append((d.degree, 1))
        return out

    @property
    def seminormal_within_bound(self) -> bool:
        return not self.traverso_witnesses


def _check_module_finite(A, B, images):
    pos = [img for k, img in enumerate(images) if A.weights and A.weights[k] > 0]
    fibre = B.quotient(pos, label="B / A_+ B")
    if not fibre.is_zero_dimensional:
        raise NotModuleFinite("B is not module-finite over A (B / A_+ B is infinite-dimensional)")
    return fibre.dimension()


def cech_exactness(A: FinitelyPresentedAlgebra, B: FinitelyPresentedAlgebra, images, degree_bound: int) -> CechReport:
    """Degreewise exactness of 0 -> A -> B -> B (x)_A B for degrees 0..degree_bound.

    ``images`` are the images of A's variables in B (polynomials or strings).
    """
    if not (A.graded and B.graded):
        raise ValueError("both rings must be graded")
    imgs = [parse_polynomial(s, B.names, B.field) if isinstance(s, str) else s for s in images]
    if len(imgs) != A.nvars:
        raise ValueError("one image per variable of A is required")
    for k, img in enumerate(imgs):
        ws = {B.weight(e) for e in img.terms}
        if img and ws != {A.weights[k]}:
            raise ValueError(f"image of {A.names[k]} is not homogeneous of weight {A.weights[k]}")
    for g in A.generators:
        if not B.contains(_substitute(g, imgs, B.nvars, B.field)):
            raise ValueError("the images do not define a ring map A -> B")
    fibre_dim = _check_module_finite(A, B, imgs)
    T = tensor_square(A, B, imgs)
    Ab = A.based(degree_bound)
    Bb = B.based(3 * degree_bound)
    Tb = T.based(degree_bound)
    n = B.nvars
    left = [_embed(B.var(k), 2 * n, 0) for k in range(n)]
    right = [_embed(B.var(k), 2 * n, n) for k in range(n)]
    degrees = []
    witnesses = []
    for d in range(degree_bound + 1):
        a_idx = Ab.by_weight.get(d, [])
        b_idx = [i for i in Bb.by_weight.get(d, [])]
        b_pos = {i: k for k, i in enumerate(b_idx)}
        phi_cols = []
        for i in a_idx:
            mono = Polynomial.monomial(Ab.monomials[i], A.field.one, A.field)
            img = B.to_vector(_substitute(mono, imgs, B.nvars, B.field), Bb)
            phi_cols.append({b_pos[j]: c for j, c in img.items()})
        t_idx = Tb.by_weight.get(d, [])
        t_pos = {i: k for k, i in enumerate(t_idx)}
        delta = []
        for i in b_idx:
            mono = Polynomial.monomial(Bb.monomials[i], B.field.one, B.field)
            v = _substitute(mono, left, 2 * n, B.field) - _substitute(mono, right, 2 * n, B.field)
            vec = T.to_vector(v, Tb)
            delta.append({t_pos[j]: c for j, c in vec.items()})
        _, eq = image_and_kernel(delta)
        degrees.append(CechDegree(d, len(a_idx), len(b_idx), len(t_idx), len(eq), rank(phi_cols)))
        # Traverso-type witnesses among basis monomials of B_d
        image_span = Echelon().extend(phi_cols)
        for i in b_idx:
            if image_span.contains({b_pos[i]: B.field.one}):
                continue
            mono = Polynomial.monomial(Bb.monomials[i], B.field.one, B.field)
            if _in_image(A, B, imgs, mono * mono, 2 * d) and _in_image(A, B, imgs, mono * mono * mono, 3 * d):
                witnesses.append((d, mono.to_str(B.names)))
    notes = [f"B / A_+ B has dimension {fibre_dim}"]
    return CechReport(degrees, witnesses, True, notes)


def _in_image(A, B, imgs, b: Polynomial, d: int) -> bool:
    Ab = A.based(d)
    Bb = B.based(max(d, 1))
    cols = []
    for i in Ab.by_weight.get(d, []):
        mono = Polynomial.monomial(Ab.monomials[i], A.field.one, A.field)
        cols.append(B.to_vector(_substitute(mono, imgs, B.nvars, B.field), Bb))
    ech = Echelon().extend(cols)
    return ech.contains(B.to_vector(b, Bb))


def cross_extension():
    """Q[x,y]/(xy) inside Q[X] x Q[Y], the product presented with an idempotent e of weight 0."""
    from .parsing import parse_ring

    A = parse_ring("ring Q[x,y] / (x*y) weights x=1 y=1")
    B = parse_ring("ring Q[X,Y,e] / (e^2 - e, X - X*e, Y*e) weights X=1 Y=1 e=0")
    return A, B, ["X", "Y"]


def cusp_extension():
    """Q[t^2, t^3] inside its normalization Q[t]."""
    from .parsing import parse_ring

    A = parse_ring("ring Q[x,y] / (y^2 - x^3) weights x=2 y=3")
    B = parse_ring("ring Q[t] weights t=1")
    return A, B, ["t^2", "t^3"]


def line_extension():
    from .parsing import parse_ring

    A = parse_ring("ring Q[t] weights t=1")
    return A, A, ["t"]
