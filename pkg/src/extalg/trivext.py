"""Trivial ring extensions and the pair/copair presentations of their
modules.

The extension of an algebra R by an R-R-bimodule M multiplies by
(r1, m1)(r2, m2) = (r1 r2, r1 m2 + m1 r2), making M a square-zero ideal.
Left modules over the extension are equivalent to pairs (X, alpha) with
alpha: M ox X -> X vanishing on M ox M ox X, and to copairs [Y, beta] with
beta: Y -> Hom(M, Y) vanishing under postcomposition with itself.  This
module implements the conversions, the six functors between the base and
extension categories, and the comparison isomorphisms they satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .algebra import (Algebra, AlgebraError, Bimodule, HomModule, LeftModule,
                      ModuleHom, RightModule, TensorSpace, direct_sum_modules,
                      field_algebra, hom_from_bimodule, hom_space,
                      image_module, find_isomorphism, kernel_module,
                      opposite_algebra, quotient_module, cokernel_module,
                      tensor_bimodule_left, tensor_map_first,
                      tensor_map_second, tensor_right_bimodule,
                      tensor_right_left)
from .linalg import FpMatrix, hstack, is_invertible, kron, solve


class TrivextError(ValueError):
    pass


class TrivialExtension:
    """R extended by a square-zero copy of the bimodule M.

    Total algebra basis: the R-basis first, then the M-basis; all block
    matrices below are written against this order.
    """

    def __init__(self, base: Algebra, bimodule: Bimodule):
        if bimodule.left_over is not base or bimodule.right_over is not base:
            raise TrivextError("bimodule legs must both be the base algebra")
        self.base = base
        self.bimodule = bimodule
        n, d = base.dim, bimodule.dim
        sc = np.zeros((n + d, n + d, n + d), dtype=np.int64)
        sc[:n, :n, :n] = base.sc
        for i in range(n):
            # r_i * m_j and m_j * r_i land in the M part
            sc[i, n:, n:] = bimodule.left_action[i].arr.T
            sc[n:, i, n:] = bimodule.right_action[i].arr.T
        unit = np.concatenate([base.unit, np.zeros(d, dtype=np.int64)])
        self.total = Algebra(base.field, sc, unit)
        self.base_dim = n
        self.ideal_dim = d
        self._cache: dict = {}

    @property
    def field(self):
        return self.base.field

    def __repr__(self):
        return (f"TrivialExtension(base_dim={self.base_dim}, "
                f"ideal_dim={self.ideal_dim}, p={self.field.p})")


def trivial_extension(base: Algebra, bimodule: Bimodule) -> TrivialExtension:
    return TrivialExtension(base, bimodule)


def opposite_extension(t: TrivialExtension) -> TrivialExtension:
    """The extension of the opposite base by the leg-swapped bimodule; its
    total algebra has literally the opposite multiplication table."""
    if "opposite" not in t._cache:
        swapped = Bimodule(opposite_algebra(t.base), opposite_algebra(t.base),
                           t.bimodule.right_action, t.bimodule.left_action)
        top = TrivialExtension(opposite_algebra(t.base), swapped)
        top._cache["opposite"] = t
        t._cache["opposite"] = top
    return t._cache["opposite"]


# ---------------------------------------------------------------------------
# pair and copair presentations


class PairModule:
    """(X, alpha) with X a left module over the base and alpha a module map
    M ox X -> X killing M ox M ox X."""

    def __init__(self, t: TrivialExtension, x: LeftModule,
                 alpha_matrix: FpMatrix, validate: bool = True):
        self.t = t
        self.x = x
        self.tensor = tensor_bimodule_left(t.bimodule, x)
        self.alpha = ModuleHom(self.tensor.space, x, alpha_matrix,
                               validate=validate)
        if validate:
            self.validate()

    def validate(self):
        t2 = tensor_bimodule_left(self.t.bimodule, self.tensor.space)
        m_alpha = tensor_map_second(t2, self.tensor, self.alpha)
        if not (self.alpha.matrix @ m_alpha.matrix).is_zero():
            raise TrivextError("structure map does not square to zero")

    def same_presentation(self, other: "PairModule") -> bool:
        return (self.x.dim == other.x.dim
                and all(a == b for a, b in zip(self.x.action, other.x.action))
                and self.alpha.matrix == other.alpha.matrix)

    def __repr__(self):
        return f"PairModule(x_dim={self.x.dim}, over={self.t!r})"


class CopairModule:
    """[Y, beta] with beta: Y -> Hom(M, Y) killed by postcomposition with
    itself."""

    def __init__(self, t: TrivialExtension, y: LeftModule,
                 beta_matrix: FpMatrix, validate: bool = True):
        self.t = t
        self.y = y
        self.hom = hom_from_bimodule(t.bimodule, y)
        self.beta = ModuleHom(y, self.hom.space, beta_matrix,
                              validate=validate)
        if validate:
            self.validate()

    def validate(self):
        hom2 = hom_from_bimodule(self.t.bimodule, self.hom.space)
        beta_post = self.hom.postcompose(hom2, self.beta)
        if not (beta_post.matrix @ self.beta.matrix).is_zero():
            raise TrivextError("costructure map does not square to zero")

    def same_presentation(self, other: "CopairModule") -> bool:
        return (self.y.dim == other.y.dim
                and all(a == b for a, b in zip(self.y.action, other.y.action))
                and self.beta.matrix == other.beta.matrix)

    def __repr__(self):
        return f"CopairModule(y_dim={self.y.dim}, over={self.t!r})"


class RightPairModule:
    """(X, alpha) on the right: alpha: X ox M -> X killing X ox M ox M."""

    def __init__(self, t: TrivialExtension, x: RightModule,
                 alpha_matrix: FpMatrix, validate: bool = True):
        self.t = t
        self.x = x
        self.tensor = tensor_right_bimodule(x, t.bimodule)
        self.alpha = ModuleHom(self.tensor.space, x, alpha_matrix,
                               validate=validate)
        if validate:
            self.validate()

    def validate(self):
        t2 = tensor_right_bimodule(self.tensor.space, self.t.bimodule)
        alpha_m = tensor_map_first(t2, self.tensor, self.alpha)
        if not (self.alpha.matrix @ alpha_m.matrix).is_zero():
            raise TrivextError("structure map does not square to zero")

    def __repr__(self):
        return f"RightPairModule(x_dim={self.x.dim}, over={self.t!r})"


# ---------------------------------------------------------------------------
# conversions


def pair_to_module(pair: PairModule) -> LeftModule:
    """The left module over the total algebra: (r, m) acts as
    r.x + alpha(m ox x)."""
    t = pair.t
    field = t.field
    dx = pair.x.dim
    ix = FpMatrix.identity(dx, field)
    action = list(pair.x.action)
    for j in range(t.ideal_dim):
        ej = FpMatrix.zeros(t.ideal_dim, 1, field)
        ej.arr[j, 0] = 1
        action.append(pair.alpha.matrix @ pair.tensor.project @ kron(ej, ix))
    return LeftModule(t.total, action)


def module_to_pair(mod: LeftModule, t: TrivialExtension) -> PairModule:
    """Inverse of pair_to_module; the structure map is read off the action
    of the ideal basis."""
    n, d = t.base_dim, t.ideal_dim
    x = LeftModule(t.base, mod.action[:n])
    pair0 = tensor_bimodule_left(t.bimodule, x)
    if d and x.dim:
        plain = hstack([mod.action[n + j] for j in range(d)])
    else:
        plain = FpMatrix.zeros(x.dim, d * x.dim, t.field)
    alpha_mat = plain @ pair0.include
    if alpha_mat @ pair0.project != plain:
        raise TrivextError("ideal action does not factor through the "
                           "balanced tensor; not a module over the extension")
    return PairModule(t, x, alpha_mat)


def copair_to_module(copair: CopairModule) -> LeftModule:
    """(r, m) acts as r.y + (beta y)(m)."""
    t = copair.t
    action = list(copair.y.action)
    for j in range(t.ideal_dim):
        ev = copair.hom.evaluation_matrix(j)
        action.append(ev @ copair.beta.matrix)
    return LeftModule(t.total, action)


def module_to_copair(mod: LeftModule, t: TrivialExtension) -> CopairModule:
    n, d = t.base_dim, t.ideal_dim
    y = LeftModule(t.base, mod.action[:n])
    hm = hom_from_bimodule(t.bimodule, y)
    cols = []
    for b in range(y.dim):
        tb = np.zeros((y.dim, d), dtype=np.int64)
        for j in range(d):
            tb[:, j] = mod.action[n + j].arr[:, b]
        try:
            cols.append(hm.homs.coords(FpMatrix(tb, t.field)))
        except AlgebraError as exc:
            raise TrivextError(
                "ideal action is not given by module maps from the "
                "bimodule") from exc
    arr = (np.array(cols, dtype=np.int64).T if cols else
           np.zeros((hm.homs.dim, 0), dtype=np.int64))
    beta_mat = FpMatrix(arr.reshape(hm.homs.dim, y.dim), t.field)
    return CopairModule(t, y, beta_mat)


def right_pair_to_module(rp: RightPairModule) -> RightModule:
    t = rp.t
    field = t.field
    ix = FpMatrix.identity(rp.x.dim, field)
    action = list(rp.x.action)
    for j in range(t.ideal_dim):
        ej = FpMatrix.zeros(t.ideal_dim, 1, field)
        ej.arr[j, 0] = 1
        action.append(rp.alpha.matrix @ rp.tensor.project @ kron(ix, ej))
    return RightModule(t.total, action)


def module_to_right_pair(mod: RightModule, t: TrivialExtension) -> RightPairModule:
    n, d = t.base_dim, t.ideal_dim
    x = RightModule(t.base, mod.action[:n])
    ts = tensor_right_bimodule(x, t.bimodule)
    plain = np.zeros((x.dim, x.dim * d), dtype=np.int64)
    for b in range(x.dim):
        for j in range(d):
            plain[:, b * d + j] = mod.action[n + j].arr[:, b]
    plain = FpMatrix(plain, t.field)
    alpha_mat = plain @ ts.include
    if alpha_mat @ ts.project != plain:
        raise TrivextError("ideal action does not factor through the "
                           "balanced tensor; not a module over the extension")
    return RightPairModule(t, x, alpha_mat)


# ---------------------------------------------------------------------------
# the six functors


def functor_T(t: TrivialExtension, x: LeftModule) -> PairModule:
    """T(X) = (X + M ox X, mu) with mu feeding the X summand into the
    M ox X summand; the structure matrix is the block [[0,0],[1,0]]."""
    ts0 = tensor_bimodule_left(t.bimodule, x)
    w, incls, projs = direct_sum_modules([x, ts0.space])
    tsw = tensor_bimodule_left(t.bimodule, w)
    m_proj = tensor_map_second(tsw, ts0, projs[0])
    mu = incls[1].matrix @ m_proj.matrix
    return PairModule(t, w, mu)


def functor_H(t: TrivialExtension, y: LeftModule) -> CopairModule:
    """H(Y) = [Hom(M, Y) + Y, theta] with theta feeding the hom summand
    into the Y slot of Hom(M, -)."""
    hm = hom_from_bimodule(t.bimodule, y)
    w, incls, _ = direct_sum_modules([hm.space, y])
    hw = hom_from_bimodule(t.bimodule, w)
    field = t.field
    cols = []
    for k in range(hm.homs.dim):
        lifted = incls[1].matrix @ hm.homs.basis_hom(k).matrix
        cols.append(hw.homs.coords(lifted))
    arr = (np.array(cols, dtype=np.int64).T if cols else
           np.zeros((hw.homs.dim, 0), dtype=np.int64))
    theta = np.hstack([arr.reshape(hw.homs.dim, hm.homs.dim),
                       np.zeros((hw.homs.dim, y.dim), dtype=np.int64)])
    return CopairModule(t, w, FpMatrix(theta, field))


def functor_Z_pair(t: TrivialExtension, x: LeftModule) -> PairModule:
    ts = tensor_bimodule_left(t.bimodule, x)
    return PairModule(t, x, FpMatrix.zeros(x.dim, ts.space.dim, t.field))


def functor_Z_copair(t: TrivialExtension, y: LeftModule) -> CopairModule:
    hm = hom_from_bimodule(t.bimodule, y)
    return CopairModule(t, y, FpMatrix.zeros(hm.space.dim, y.dim, t.field))


def functor_U(p) -> LeftModule:
    """Forget the (co)structure map."""
    if isinstance(p, PairModule):
        return p.x
    if isinstance(p, CopairModule):
        return p.y
    raise TrivextError("expected a pair or copair")


def functor_C(pair: PairModule) -> Tuple[LeftModule, ModuleHom]:
    """coker(alpha) with the projection from the underlying module."""
    return cokernel_module(pair.alpha)


def functor_K(copair: CopairModule) -> Tuple[LeftModule, ModuleHom]:
    """ker(beta) with the inclusion into the underlying module."""
    return kernel_module(copair.beta)


# ---------------------------------------------------------------------------
# classification of projectives and injectives over the extension


def classify_projective(pair: PairModule,
                        seed: int = 0) -> Optional[Tuple[LeftModule, ModuleHom]]:
    """When the converted module is projective over the total algebra,
    return (P, witness) with P projective over the base and pair
    isomorphic to T(P); None otherwise."""
    from .structure import is_projective
    mod = pair_to_module(pair)
    if not is_projective(mod, seed):
        return None
    cand, _ = functor_C(pair)
    tp = functor_T(pair.t, cand)
    wit = find_isomorphism(mod, pair_to_module(tp), seed=seed)
    if wit is None:
        return None
    return cand, wit


def classify_injective(copair: CopairModule,
                       seed: int = 0) -> Optional[Tuple[LeftModule, ModuleHom]]:
    """Dual classification: a converted injective is H(E) for the injective
    base module E = ker(beta)."""
    from .structure import is_injective
    mod = copair_to_module(copair)
    if not is_injective(mod, seed):
        return None
    cand, _ = functor_K(copair)
    he = functor_H(copair.t, cand)
    wit = find_isomorphism(mod, copair_to_module(he), seed=seed)
    if wit is None:
        return None
    return cand, wit


# ---------------------------------------------------------------------------
# the canonical short exact sequences


@dataclass
class ShortExactSequence:
    sub: LeftModule
    mid: LeftModule
    quo: LeftModule
    mono: ModuleHom
    epi: ModuleHom

    def is_exact(self) -> bool:
        from .algebra import is_exact_at
        from .linalg import rank
        return (rank(self.mono.matrix) == self.sub.dim
                and rank(self.epi.matrix) == self.quo.dim
                and is_exact_at(self.mono, self.epi))


def _inflate(t: TrivialExtension, x: LeftModule) -> LeftModule:
    """Z(X) directly as a total module: the ideal acts as zero."""
    z = FpMatrix.zeros(x.dim, x.dim, t.field)
    return LeftModule(t.total, list(x.action) + [z] * t.ideal_dim)


def _inflate_right(t: TrivialExtension, x: RightModule) -> RightModule:
    z = FpMatrix.zeros(x.dim, x.dim, t.field)
    return RightModule(t.total, list(x.action) + [z] * t.ideal_dim)


def ses_of_pair(pair: PairModule) -> ShortExactSequence:
    """0 -> Z(im alpha) -> (X, alpha) -> Z(coker alpha) -> 0 over the
    total algebra."""
    t = pair.t
    img, incl, _ = image_module(pair.alpha)
    quo, proj = cokernel_module(pair.alpha)
    mid = pair_to_module(pair)
    sub = _inflate(t, img)
    quo_t = _inflate(t, quo)
    return ShortExactSequence(sub, mid, quo_t,
                              ModuleHom(sub, mid, incl.matrix, validate=False),
                              ModuleHom(mid, quo_t, proj.matrix,
                                        validate=False))


def ses_of_copair(copair: CopairModule) -> ShortExactSequence:
    """0 -> Z(ker beta) -> [Y, beta] -> Z(im beta) -> 0 over the total
    algebra."""
    t = copair.t
    kerb, incl = kernel_module(copair.beta)
    img, _, epi = image_module(copair.beta)
    mid = copair_to_module(copair)
    sub = _inflate(t, kerb)
    quo_t = _inflate(t, img)
    return ShortExactSequence(sub, mid, quo_t,
                              ModuleHom(sub, mid, incl.matrix, validate=False),
                              ModuleHom(mid, quo_t, epi.matrix,
                                        validate=False))


# ---------------------------------------------------------------------------
# induced factorizations


def induced_delta(pair: PairModule) -> ModuleHom:
    """The unique delta: M ox coker(alpha) -> X with
    delta o (M ox proj) = alpha."""
    quo, proj = cokernel_module(pair.alpha)
    tsq = tensor_bimodule_left(pair.t.bimodule, quo)
    m_proj = tensor_map_second(pair.tensor, tsq, proj)
    dt = solve(m_proj.matrix.transpose(), pair.alpha.matrix.transpose())
    if dt is None:
        raise TrivextError("structure map does not factor through the "
                           "tensored cokernel")
    delta = ModuleHom(tsq.space, pair.x, dt.transpose(), validate=False)
    if delta.matrix @ m_proj.matrix != pair.alpha.matrix:
        raise TrivextError("factorization identity failed")
    return delta


def induced_gamma(copair: CopairModule) -> ModuleHom:
    """The unique gamma: Y -> Hom(M, ker beta) with
    (incl postcomposition) o gamma = beta."""
    kerb, incl = kernel_module(copair.beta)
    hk = hom_from_bimodule(copair.t.bimodule, kerb)
    iota_star = hk.postcompose(copair.hom, incl)
    g = solve(iota_star.matrix, copair.beta.matrix)
    if g is None:
        raise TrivextError("costructure map does not factor through the "
                           "kernel homs")
    gamma = ModuleHom(copair.y, hk.space, g, validate=False)
    if iota_star.matrix @ gamma.matrix != copair.beta.matrix:
        raise TrivextError("factorization identity failed")
    return gamma


# ---------------------------------------------------------------------------
# the comparison isomorphisms


def tensor_iso_pair(w: RightModule, pair: PairModule) -> ModuleHom:
    """The canonical iso Z(W) ox_total (X, alpha) -> W ox_base coker(alpha)
    induced by w ox x -> w ox proj(x); returned as an invertible map of
    plain spaces."""
    t = pair.t
    mid = pair_to_module(pair)
    zw = _inflate_right(t, w)
    lhs = tensor_right_left(zw, mid)
    quo, proj = cokernel_module(pair.alpha)
    rhs = tensor_right_left(w, quo)
    iw = FpMatrix.identity(w.dim, t.field)
    mat = rhs.project @ kron(iw, proj.matrix) @ lhs.include
    if not is_invertible(mat):
        raise TrivextError("canonical tensor comparison map is not "
                           "invertible")
    return ModuleHom(lhs.space, rhs.space, mat, validate=False)


def hom_iso_copair(x: LeftModule, copair: CopairModule) -> ModuleHom:
    """The canonical iso Hom_base(X, ker beta) -> Hom_total(Z(X), [Y, beta])
    sending u to incl o u; returned as an invertible map of hom-coordinate
    spaces."""
    t = copair.t
    kerb, incl = kernel_module(copair.beta)
    rhs_space = hom_space(x, kerb)
    zx = _inflate(t, x)
    mid = copair_to_module(copair)
    lhs_space = hom_space(zx, mid)
    field = t.field
    cols = [lhs_space.coords(incl.matrix @ rhs_space.basis_hom(k).matrix)
            for k in range(rhs_space.dim)]
    arr = (np.array(cols, dtype=np.int64).T if cols else
           np.zeros((lhs_space.dim, 0), dtype=np.int64))
    mat = FpMatrix(arr.reshape(lhs_space.dim, rhs_space.dim), field)
    if mat.rows != mat.cols or not is_invertible(mat):
        raise TrivextError("canonical hom comparison map is not invertible")
    fa = field_algebra(field)
    src = LeftModule(fa, [FpMatrix.identity(rhs_space.dim, field)],
                     validate=False)
    dst = LeftModule(fa, [FpMatrix.identity(lhs_space.dim, field)],
                     validate=False)
    return ModuleHom(src, dst, mat, validate=False)
