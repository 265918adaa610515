"""Finite oriented-graph lattices with gauge action and tree gauge fixing.

A lattice is a connected multigraph with oriented links, a set of oriented
plaquettes (closed link cycles), a basepoint and a spanning tree.  Gauge
configurations assign a special unitary matrix to every link; gauge
transformations assign one to every site and act by
``(a . g)(link) = g(source) a(link) g(target)^{-1}``.

Fixing the tree gauge trivializes all tree links and reduces a
configuration to the tuple of its off-tree link values; the residual
symmetry is diagonal conjugation by the transform's basepoint value.

The module also carries the reduced phase-space pieces: phase points
(group element + algebra element per off-tree link), the momentum map
``sum_i Ad(a_i) A_i - A_i`` whose zero level is the constraint surface, the
electric/magnetic lattice energy, and the density ``exp(-kappa/hbar) eta``
with Kahler potential ``kappa = sum |A_i|^2`` and half-form factor
``eta = prod sqrt(det(sin(ad A_i)/ad A_i))``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidDims, LatticeMismatch, SolveFailed
from .matrices import (
    Mat2,
    adjoint_matrix,
    ad_matrix,
    algebra_from_vector,
    algebra_norm_sq,
    haar_su2,
    polar_decompose,
    random_algebra,
    vector_from_algebra,
)
from .scalars import DEFAULT_ABS_TOL


@dataclass(frozen=True)
class LatticeGraph:
    n_sites: int
    links: tuple  # of (source, target) pairs
    plaquettes: tuple  # of tuples of (link_id, direction +1/-1)
    basepoint: int = 0
    tree: tuple = ()  # sorted link ids forming a spanning tree

    def __post_init__(self):
        object.__setattr__(self, "links", tuple(tuple(l) for l in self.links))
        object.__setattr__(
            self,
            "plaquettes",
            tuple(tuple(tuple(step) for step in p) for p in self.plaquettes),
        )
        object.__setattr__(self, "tree", tuple(sorted(self.tree)))
        self._validate()

    def _validate(self):
        n = self.n_sites
        if n < 1:
            raise InvalidDims("lattice needs at least one site")
        for s, t in self.links:
            if not (0 <= s < n and 0 <= t < n):
                raise InvalidDims(f"link ({s},{t}) references a missing site")
        if not (0 <= self.basepoint < n):
            raise InvalidDims("basepoint outside the site range")
        # connectivity and tree structure via union-find
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        tree_set = set(self.tree)
        if len(tree_set) != n - 1:
            raise InvalidDims("tree must contain exactly n_sites - 1 links")
        for lid in tree_set:
            if not (0 <= lid < len(self.links)):
                raise InvalidDims(f"tree references missing link {lid}")
            s, t = self.links[lid]
            rs, rt = find(s), find(t)
            if rs == rt:
                raise InvalidDims("tree contains a cycle")
            parent[rs] = rt
        if any(find(x) != find(0) for x in range(n)):
            raise InvalidDims("tree does not span the lattice")
        for p in self.plaquettes:
            if not p:
                raise InvalidDims("empty plaquette")
            cur = None
            start = None
            for lid, direction in p:
                if not (0 <= lid < len(self.links)) or direction not in (1, -1):
                    raise InvalidDims("malformed plaquette step")
                s, t = self.links[lid]
                a, b = (s, t) if direction == 1 else (t, s)
                if cur is None:
                    start = a
                elif a != cur:
                    raise InvalidDims("plaquette boundary is not a connected walk")
                cur = b
            if cur != start:
                raise InvalidDims("plaquette boundary does not close")

    @property
    def off_tree(self) -> tuple:
        """Off-tree link ids in canonical ascending order."""
        tree_set = set(self.tree)
        return tuple(l for l in range(len(self.links)) if l not in tree_set)

    @property
    def n_loops(self) -> int:
        return len(self.links) - len(self.tree)


def rect_lattice(dims, periodic: bool = False) -> LatticeGraph:
    """Rectangular lattice with row-major site numbering and a BFS tree.

    dims is a sequence of extents, one per axis; with ``periodic`` every
    axis wraps and must have extent >= 2.  Links point in the positive
    axis direction, plaquettes are the counterclockwise unit squares of
    each axis pair.
    """
    dims = [int(d) for d in dims]
    if not dims or any(d < 1 for d in dims):
        raise InvalidDims(f"extents must be >= 1, got {dims}")
    if periodic and any(d < 2 for d in dims):
        raise InvalidDims("periodic axes need extent >= 2")
    ndim = len(dims)
    strides = [1] * ndim
    for k in range(ndim - 2, -1, -1):
        strides[k] = strides[k + 1] * dims[k + 1]
    n_sites = strides[0] * dims[0]

    def site_id(coord):
        return sum(c * s for c, s in zip(coord, strides))

    def shift(coord, axis):
        c = list(coord)
        c[axis] += 1
        if c[axis] == dims[axis]:
            if not periodic:
                return None
            c[axis] = 0
        return tuple(c)

    links = []
    link_at = {}
    for coord in itertools.product(*(range(d) for d in dims)):
        s = site_id(coord)
        for axis in range(ndim):
            nb = shift(coord, axis)
            if nb is None:
                continue
            link_at[(s, axis)] = len(links)
            links.append((s, site_id(nb)))

    plaquettes = []
    for coord in itertools.product(*(range(d) for d in dims)):
        s = site_id(coord)
        for a1 in range(ndim):
            c1 = shift(coord, a1)
            if c1 is None:
                continue
            for a2 in range(a1 + 1, ndim):
                c2 = shift(coord, a2)
                if c2 is None:
                    continue
                plaquettes.append(
                    (
                        (link_at[(s, a1)], 1),
                        (link_at[(site_id(c1), a2)], 1),
                        (link_at[(site_id(c2), a1)], -1),
                        (link_at[(s, a2)], -1),
                    )
                )

    # BFS spanning tree rooted at the origin, neighbors in link-id order
    adjacency = [[] for _ in range(n_sites)]
    for lid, (s, t) in enumerate(links):
        adjacency[s].append((lid, t))
        adjacency[t].append((lid, s))
    for rows in adjacency:
        rows.sort()
    tree = []
    seen = [False] * n_sites
    seen[0] = True
    queue = [0]
    while queue:
        x = queue.pop(0)
        for lid, y in adjacency[x]:
            if not seen[y]:
                seen[y] = True
                tree.append(lid)
                queue.append(y)
    if not all(seen):
        raise InvalidDims("lattice is not connected")
    return LatticeGraph(n_sites, tuple(links), tuple(plaquettes), 0, tuple(tree))


@dataclass(frozen=True)
class GaugeConfig:
    lattice: LatticeGraph
    values: tuple  # one Mat2 per link

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != len(self.lattice.links):
            raise LatticeMismatch("one value per link required")


@dataclass(frozen=True)
class GaugeTransform:
    lattice: LatticeGraph
    values: tuple  # one Mat2 per site

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.lattice.n_sites:
            raise LatticeMismatch("one value per site required")


@dataclass(frozen=True)
class PhasePoint:
    """Point (a_1..a_N, A_1..A_N) of the reduced cotangent space."""

    a: tuple
    alg: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "alg", tuple(self.alg))
        if len(self.a) != len(self.alg):
            raise ValueError("group and algebra tuples must have equal length")

    @property
    def n(self) -> int:
        return len(self.a)


def _same_lattice(x, y):
    if x.lattice != y.lattice:
        raise LatticeMismatch("objects live on different lattices")


def apply_gauge(config: GaugeConfig, g: GaugeTransform) -> GaugeConfig:
    """(a . g)(link) = g(source) a(link) g(target)^{-1}."""
    _same_lattice(config, g)
    out = []
    for lid, (s, t) in enumerate(config.lattice.links):
        out.append(g.values[s] * config.values[lid] * g.values[t].inv())
    return GaugeConfig(config.lattice, tuple(out))


def apply_gauge_momenta(momenta, g: GaugeTransform):
    """Momenta transform by conjugation with the link-target value."""
    out = []
    for lid, (_, t) in enumerate(g.lattice.links):
        out.append(momenta[lid].conj_by(g.values[t]))
    return tuple(out)


def compose_transforms(h: GaugeTransform, g: GaugeTransform) -> GaugeTransform:
    """Pointwise product (h g)(x) = h(x) g(x); applying g then h equals applying hg."""
    _same_lattice(h, g)
    return GaugeTransform(h.lattice, tuple(hv * gv for hv, gv in zip(h.values, g.values)))


def identity_transform(lat: LatticeGraph, exact: bool = False) -> GaugeTransform:
    ident = Mat2.identity(exact=exact)
    return GaugeTransform(lat, tuple(ident for _ in range(lat.n_sites)))


def tree_gauge_fix(config: GaugeConfig):
    """Trivialize all tree links.

    Returns (tuple_values, g) where g is the unique pointed transform
    (identity at the basepoint) with (a . g) equal to the identity on every
    tree link, and tuple_values are the off-tree values of a . g in
    canonical link order.
    """
    lat = config.lattice
    exact = config.values[0].exact if config.values else False
    g = [None] * lat.n_sites
    g[lat.basepoint] = Mat2.identity(exact=exact)
    tree_adj = [[] for _ in range(lat.n_sites)]
    for lid in lat.tree:
        s, t = lat.links[lid]
        tree_adj[s].append((lid, t, True))
        tree_adj[t].append((lid, s, False))
    queue = [lat.basepoint]
    while queue:
        x = queue.pop(0)
        for lid, y, forward in tree_adj[x]:
            if g[y] is not None:
                continue
            # forward link x -> y needs g(y) = g(x) a; reversed y -> x needs
            # g(y) = g(x) a^{-1} for the link (y, x)
            if forward:
                g[y] = g[x] * config.values[lid]
            else:
                g[y] = g[x] * config.values[lid].inv()
            queue.append(y)
    transform = GaugeTransform(lat, tuple(g))
    fixed = apply_gauge(config, transform)
    tuple_values = tuple(fixed.values[lid] for lid in lat.off_tree)
    return tuple_values, transform


def plaquette_holonomy(config: GaugeConfig, plaquette_id: int) -> Mat2:
    """Ordered boundary product, inverting links traversed backwards."""
    lat = config.lattice
    hol = None
    for lid, direction in lat.plaquettes[plaquette_id]:
        v = config.values[lid] if direction == 1 else config.values[lid].inv()
        hol = v if hol is None else hol * v
    return hol


def kogut_susskind_energy(
    config: GaugeConfig, momenta, coupling: float, spacing: float
) -> float:
    """Electric term (g^2/2d) sum |E|^2 minus magnetic term (1/g^2 d) sum 2 Re tr(hol)."""
    if coupling <= 0 or spacing <= 0:
        raise ValueError("coupling and spacing must be positive")
    lat = config.lattice
    electric = sum(float(algebra_norm_sq(momenta[l])) for l in range(len(lat.links)))
    magnetic = 0.0
    for pid in range(len(lat.plaquettes)):
        tr = plaquette_holonomy(config, pid).trace()
        magnetic += 2.0 * tr.real  # tr + conjugate(tr)
    return (coupling**2 / (2.0 * spacing)) * electric - magnetic / (
        coupling**2 * spacing
    )


def flip_plaquette_orientations(lat: LatticeGraph, flip_ids) -> LatticeGraph:
    """Same lattice with selected plaquette boundaries traversed backwards."""
    flip = set(flip_ids)
    plaq = []
    for pid, p in enumerate(lat.plaquettes):
        if pid in flip:
            plaq.append(tuple((lid, -d) for lid, d in reversed(p)))
        else:
            plaq.append(p)
    return LatticeGraph(lat.n_sites, lat.links, tuple(plaq), lat.basepoint, lat.tree)


# -- reduced phase space ------------------------------------------------------


def momentum_map(point: PhasePoint) -> Mat2:
    """sum_i Ad(a_i) A_i - A_i, an algebra element."""
    total = Mat2.zero(exact=point.alg[0].exact if point.n else False)
    for a, x in zip(point.a, point.alg):
        total = total + a * x * a.inv() - x
    return total


def conjugate_phase_point(point: PhasePoint, g: Mat2) -> PhasePoint:
    return PhasePoint(
        tuple(a.conj_by(g) for a in point.a),
        tuple(x.conj_by(g) for x in point.alg),
    )


def sample_mu0(
    n: int,
    seed=None,
    rng: random.Random | None = None,
    diagonal: bool = False,
    bound: float = 1.0,
    tol: float = DEFAULT_ABS_TOL,
    max_retries: int = 20,
) -> PhasePoint:
    """Random phase point on the zero level of the momentum map.

    Group elements are Haar samples; the last two algebra elements are
    corrected by solving the linear system
    (Ad(a_{n-1}) - id | Ad(a_n) - id) delta = -mu in least squares.  With
    ``diagonal`` all elements are drawn from the diagonal sector, which lies
    in the zero level identically and has torus orbit type almost surely.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if rng is None:
        rng = random.Random(seed)

    if diagonal:
        a = []
        alg = []
        for _ in range(n):
            phi = rng.uniform(0.2, math.pi - 0.2)  # stay away from the center
            a.append(Mat2.diag(complex(math.cos(phi), math.sin(phi)),
                               complex(math.cos(phi), -math.sin(phi))))
            alg.append(algebra_from_vector([0.0, 0.0, rng.uniform(-bound, bound)]))
        return PhasePoint(tuple(a), tuple(alg))

    if n == 1:
        while True:
            a = haar_su2(rng)
            direction = a - Mat2.identity().scale(a.trace() / 2)
            if direction.frob() > 1e-6:
                break
        scale = rng.uniform(-bound, bound) / direction.frob()
        return PhasePoint((a,), (direction.scale(scale),))

    for _ in range(max_retries):
        a = [haar_su2(rng) for _ in range(n)]
        alg = [random_algebra(rng, bound) for _ in range(n)]
        point = PhasePoint(tuple(a), tuple(alg))
        mu_vec = vector_from_algebra(momentum_map(point))
        block = np.hstack(
            [adjoint_matrix(a[n - 2]) - np.eye(3), adjoint_matrix(a[n - 1]) - np.eye(3)]
        )
        if np.linalg.matrix_rank(block, tol=1e-8) < 3:
            continue
        delta, *_ = np.linalg.lstsq(block, -mu_vec, rcond=None)
        alg[n - 2] = alg[n - 2] + algebra_from_vector(delta[:3])
        alg[n - 1] = alg[n - 1] + algebra_from_vector(delta[3:])
        point = PhasePoint(tuple(a), tuple(alg))
        if math.sqrt(float(algebra_norm_sq(momentum_map(point)))) <= tol:
            return point
    raise SolveFailed("could not land on the constraint surface")


# -- measure density ----------------------------------------------------------


def half_form_eta(alg: Mat2) -> float:
    """sqrt(det(sin(ad A)/ad A)) evaluated spectrally from the 3x3 ad matrix.

    The skew matrix ad A has eigenvalues 0, +-iw, so the determinant is
    (sinh(w)/w)^2 with w^2 = tr(ad^T ad)/2.
    """
    m = ad_matrix(alg)
    w = math.sqrt(max(np.trace(m.T @ m) / 2.0, 0.0))
    if w < 1e-8:
        return 1.0 + w * w / 6.0
    return math.sinh(w) / w


def kahler_potential(elements) -> float:
    """sum |A_i|^2 over the polar decompositions of the given unimodular matrices."""
    total = 0.0
    for g in elements:
        _, alg = polar_decompose(g)
        total += float(algebra_norm_sq(alg))
    return total


def measure_density(elements, hbar: float) -> float:
    """exp(-kappa/hbar) * prod_i eta(A_i) for unimodular matrices a_i exp(i A_i)."""
    if hbar <= 0:
        raise ValueError("hbar must be positive")
    kappa = 0.0
    eta = 1.0
    for g in elements:
        _, alg = polar_decompose(g)
        kappa += float(algebra_norm_sq(alg))
        eta *= half_form_eta(alg)
    return math.exp(-kappa / hbar) * eta
