"""The fiber over the origin for the D8 case: its components, their stable
parts, and the two surfaces the stable parts descend to."""
from __future__ import annotations

from itertools import permutations, product

from .coxring import d8_case, embedding_ideal
from .fiberdata import int_vectors, poly_list, read_sections
from .gitfan import (
    Cone,
    NotAnOrbitClosure,
    WeightSystem,
    _dot,
    _rank,
    central_fiber_ideal,
    hilbert_basis,
    orbit_face,
    quotient_fan,
    toric_ideal,
    verify_components,
)
from .groebner import Ideal, eliminate, ideal_equal, ideal_quotient_saturate
from .linalg import FieldMatrix, IntMatrix, invariant_factors
from .parsing import parse_poly
from .poly import PolyRing
from .report import FAIL, INFO, PASS, Report

DATA = "d8_fiber.txt"
CHART = ["w02", "w01", "w03", "w04", "w12", "w23", "w24"]
COMPONENTS = ["W_u", "W02", "W0", "W2"]
DIMS = {"W_u": 2, "W02": 4, "W0": 4, "W2": 4}


def reference():
    return read_sections(DATA)


def _ideal(ring, text):
    return Ideal(ring, [parse_poly(s, ring) for s in poly_list(text)])


def component_ideals(ring, ref=None) -> dict:
    ref = ref or reference()
    return {k: _ideal(ring, ref[k]) for k in COMPONENTS}


def chart_substitution(ring):
    """Old coordinates in terms of new ones for the linear change that makes W02 binomial."""
    f = ring.field
    i = f.root_of_unity(4, 1)
    half = f(1) / 2
    v = ring.var
    out = {n: v(n) for n in ring.names}
    for a, b in (("w03", "w04"), ("w23", "w24")):
        out[a] = (v(b) - v(a)).scale(half)
        out[b] = (v(a) + v(b)).scale(half * i)
    return [out[n] for n in ring.names]


def _rename(I: Ideal, names, target: PolyRing) -> Ideal:
    imgs = [target.var(n) for n in names]
    return Ideal(target, [g.compose(imgs, target) for g in I.gens])


def match_coordinates(points, weights_of_points, chart_weights, binomials: Ideal) -> list:
    """Bijections of lattice points to chart coordinates (respecting torus weights)
    under which the toric ideal of the points equals ``binomials``."""
    ring = binomials.ring
    base = toric_ideal(points, [f"v{k + 1}" for k in range(len(points))], ring.field.order)
    classes: dict = {}
    for k, w in enumerate(weights_of_points):
        classes.setdefault(w, []).append(k)
    coord_classes: dict = {}
    for n in ring.names:
        coord_classes.setdefault(chart_weights[n], []).append(n)
    if sorted((w, len(v)) for w, v in classes.items()) != sorted((w, len(v)) for w, v in coord_classes.items()):
        return []
    keys = sorted(classes)
    hits = []
    for choice in product(*(permutations(coord_classes[w]) for w in keys)):
        names = [None] * len(points)
        for w, perm in zip(keys, choice):
            for k, n in zip(classes[w], perm):
                names[k] = n
        if ideal_equal(_rename(base, names, ring), binomials):
            hits.append(names)
    return hits


def _quadric_nonsingular(q) -> bool:
    ring = q.ring
    H = [[q.diff(a).diff(b) for b in ring.names] for a in ring.names]
    f = ring.field
    M = FieldMatrix([[h.coeff((0,) * ring.n) if h else f(0) for h in row] for row in H], f)
    return bool(M.det())


def d8_central_fiber_report(chi=(2, 1), kernel: Ideal | None = None) -> Report:
    case = d8_case()
    ref = reference()
    rep = Report("central fiber d8-wreath", meta={"chi": list(chi)})
    kernel = kernel or embedding_ideal(case)
    ring = kernel.ring
    ws = WeightSystem.from_case(case, chi)
    fiber = central_fiber_ideal(kernel, ws)
    comps = component_ideals(ring, ref)

    def decomposition():
        v = verify_components(fiber, comps, DIMS, ws)
        ok = all(v["contained"].values()) and v["radical_covered"] and v["dims_match"] and v["irredundant"]
        return (PASS if ok else FAIL), v

    rep.run("components", decomposition)
    stab = rep.get("components").detail.get("stability", {})

    def stable():
        meets = sorted(k for k, s in stab.items() if s["semistable"])
        ok = meets == ["W02", "W2"] and all(stab[k]["all_stable"] for k in meets)
        return (PASS if ok else FAIL), {"semistable_components": meets}

    rep.run("stable-components", stable)

    def omit_w0():
        partial = {k: v for k, v in comps.items() if k != "W0"}
        v = verify_components(fiber, partial)
        # the check must notice the missing component
        return (PASS if not v["radical_covered"] else FAIL), {"radical_covered_without_W0": v["radical_covered"]}

    rep.run("omitted-component-detected", omit_w0)
    rep.run("projective-plane", lambda: _pp2_item(ring, comps, ref))
    _toric_items(rep, ring, comps, ref, ws)
    return rep


def _pp2_item(ring, comps, ref):
    meet = comps["W02"] + comps["W2"]
    sat = ideal_quotient_saturate(meet, ring.var("w02"))
    keep = ["w01", "w03", "w04"]
    elim = eliminate(sat, [n for n in ring.names if n not in keep])
    Z = PolyRing(["z1", "z3", "z4"], ring.field)
    quad = parse_poly(ref["quadric"], Z)
    got = _rename(elim, ["z1", "z3", "z4"], Z)
    eq = ideal_equal(got, Ideal(Z, [quad]))
    smooth = _quadric_nonsingular(quad)
    return (PASS if eq and smooth else FAIL), {"equation": [str(g) for g in got.gb()], "nonsingular": smooth}


def _toric_items(rep, ring, comps, ref, ws):
    R7 = PolyRing(CHART, ring.field)
    binom = _ideal(R7, ref["binomials"])

    def chart():
        gens = [g for g in comps["W02"].gens if not set(g.variables()) - set(CHART)]
        W = Ideal(R7, [g.to_ring(R7) for g in gens])
        sub = chart_substitution(R7)
        changed = Ideal(R7, [g.compose(sub, R7) for g in W.gens])
        eq = ideal_equal(changed, binom)
        return (PASS if eq else FAIL), {"binomial": eq}

    rep.run("toric/binomial-chart", chart)

    rays = int_vectors(ref["rays"])
    sigma = Cone(rays)
    C = int_vectors(ref["torus_characters"])
    box = {}

    def cone():
        hb = hilbert_basis(sigma.dual())
        box["hb"] = hb
        ok = sorted(sigma.rays) == sorted(rays) and sigma.dual().dual().same_as(sigma) and len(hb) == 7
        return (PASS if ok else FAIL), {
            "rays": [list(r) for r in sigma.rays],
            "dual_rays": [list(r) for r in sigma.dual().rays],
            "hilbert_basis": [list(m) for m in hb],
        }

    rep.run("toric/cone", cone)

    def matching():
        hb = box["hb"]
        wts = [tuple(_dot(row, m) for row in C) for m in hb]
        chart_w = {n: ws.weight(n) for n in CHART}
        hits = match_coordinates(hb, wts, chart_w, binom)
        if hits:
            box["coords"] = {n: hb[k] for k, n in enumerate(hits[0])}
        return (PASS if hits else FAIL), {"matchings": len(hits), "first": hits[0] if hits else None}

    rep.run("toric/hilbert-basis-matches-binomials", matching)

    faces = {"Y1": "sigma1", "Y2": "sigma2"}
    for y, s in faces.items():
        def face_item(y=y, s=s):
            coords = box.get("coords")
            if coords is None:
                return FAIL, {"reason": "no coordinate matching"}
            pts = [coords[n] for n in CHART]
            try:
                tau = orbit_face(sigma, pts, _ideal(R7, ref[y]))
            except NotAnOrbitClosure as e:
                return FAIL, {"reason": str(e)}
            want = Cone(int_vectors(ref[s]), 4)
            box[s] = tau
            return (PASS if tau.same_as(want) else FAIL), {"face": [list(r) for r in tau.rays]}

        rep.run(f"toric/orbit-face-{y}", face_item)

    def distance():
        out = {}
        ok = True
        for s in ("sigma1", "sigma2"):
            tau = Cone(int_vectors(ref[s]), 4)
            for m in int_vectors(ref[f"{s}_offface"]):
                inside = all(_dot(m, r) >= 0 for r in tau.rays) and any(_dot(m, r) > 0 for r in tau.rays)
                out[f"{s}:{m}"] = inside
                ok = ok and inside
        return (PASS if ok else FAIL), out

    rep.run("toric/distance-monomials", distance)

    def fan():
        P = int_vectors(ref["projection"])
        kills = all(_dot(c, p) == 0 for c in C for p in P)
        sat = _rank([list(p) for p in P]) == 2 and invariant_factors(IntMatrix([list(p) for p in P])) == [1, 1]
        removed = [Cone(int_vectors(ref[s]), 4) for s in ("sigma1", "sigma2")]
        F = quotient_fan(sigma, removed, P)
        computed = [list(r) for r in F.rays]
        printed = [list(r) for r in int_vectors(ref["fan_rays_printed"])]
        a = F.hirzebruch_index()
        ok = kills and sat and F.is_complete() and F.is_smooth() and len(F.rays) == 4 and a == 4
        detail = {
            "projection_kills_characters": kills,
            "projection_saturated": sat,
            "rays": computed,
            "complete": F.is_complete(),
            "smooth": F.is_smooth(),
            "hirzebruch": a,
            "printed_rays": printed,
            "matches_printed": sorted(computed) == sorted(printed),
            "printed_consecutive_dets": _consecutive_dets(printed),
        }
        return (PASS if ok else FAIL), detail

    rep.run("toric/quotient-fan", fan)
    diff = _ray_diff(rep)
    same = not diff["only_computed"] and not diff["only_printed"]
    rep.add("toric/printed-ray-list", INFO, {"agrees": same, **diff})


def _consecutive_dets(rays):
    from .gitfan import _angle_key

    rs = sorted(rays, key=_angle_key)
    return [rs[k][0] * rs[(k + 1) % len(rs)][1] - rs[k][1] * rs[(k + 1) % len(rs)][0] for k in range(len(rs))]


def _ray_diff(rep):
    d = rep.get("toric/quotient-fan").detail
    comp = {tuple(r) for r in d.get("rays", [])}
    pr = {tuple(r) for r in d.get("printed_rays", [])}
    return {"only_computed": sorted(map(list, comp - pr)), "only_printed": sorted(map(list, pr - comp))}
