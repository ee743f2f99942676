"""Verification stages and report assembly.

Each stage checks a fixed list of claims (see ``claims.py``).  A claim
that raises or whose check comes out false is recorded as ``failed`` with a
diagnostic; the remaining claims of the stage still run.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

import numpy as np

from . import claims as C
from . import constants as K
from .belyi import (
    verify_belyi,
    verify_delta,
    verify_family_branch_data,
    verify_square_root_structure,
)
from .dedekind import (
    DEFAULT_PER_PRIME,
    DEFAULT_PRIME_COUNT,
    DEFAULT_TOL_FIX,
    DEFAULT_TOL_FIX2,
    Pencil,
    default_primes,
    index63_consequences,
    printed_exponents_even,
    sample_frobenius,
    square_disc_check,
    statistics,
)
from .exact import UniPoly
from .nielsen import NielsenContext, braid_orbits, count_tuples, validate_tuple
from .perm import CycleType, StabilizerChain, cycle_type, minimal_blocks, orbits
from .sp62 import ORDER, SymplecticModel, form_orbits, locate_class_vector, rational_class_check

REPORT_FORMAT = 1
MIN_DISTINCT_TYPES = 15


class StageFailure(AssertionError):
    """A computed value disagrees with the claimed one."""


@dataclass
class Config:
    stages: list[str] = field(default_factory=lambda: ["all"])
    primes: list[int] | None = None
    samples_per_prime: int = DEFAULT_PER_PRIME
    seed: int = 42
    a0: list[Fraction] = field(default_factory=lambda: [Fraction(1), Fraction(2), Fraction(3)])
    tolerance_fix: float = DEFAULT_TOL_FIX
    tolerance_fix2: float = DEFAULT_TOL_FIX2
    constants: str | None = None
    timings: bool = False

    def as_dict(self) -> dict:
        return {
            "stages": list(self.stages),
            "primes": list(self.primes) if self.primes is not None else "default",
            "samples_per_prime": self.samples_per_prime,
            "seed": self.seed,
            "a0": [K.format_rational(a) for a in self.a0],
            "tolerance_fix": self.tolerance_fix,
            "tolerance_fix2": self.tolerance_fix2,
            "constants": Path(self.constants).name if self.constants else "default",
            "timings": self.timings,
        }


class Context:
    """State shared between stages of one run."""

    def __init__(self, config: Config, consts: K.Constants):
        self.config = config
        self.consts = consts
        self.model: SymplecticModel | None = None
        self.class_vector = None
        self.pencil: Pencil | None = None

    def require(self, check: bool, message: str) -> None:
        if not check:
            raise StageFailure(message)

    def claimed_types(self, key: str) -> dict[str, CycleType]:
        return {k: CycleType.parse(v) for k, v in self.consts.claimed[key].items()}


# ---------------------------------------------------------------------------
# JSON conversion

def jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k if not isinstance(k, Fraction) else K.format_rational(k)): jsonable(v)
                for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in obj]
        return sorted(items, key=json.dumps) if isinstance(obj, (set, frozenset)) else items
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return K.format_rational(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return round(float(obj), 12)
    if isinstance(obj, (CycleType, UniPoly)):
        return str(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# ---------------------------------------------------------------------------
# stages

def stage_perm_triple(ctx: Context) -> dict[str, Callable[[], Any]]:
    c = ctx.consts
    x, z = c.x, c.z
    y = c.y
    claimed = ctx.claimed_types("belyi_types")

    def cycle_types():
        got = {"x": cycle_type(x), "y": cycle_type(y), "z": cycle_type(z)}
        want = {"x": claimed["0"], "y": claimed["1"], "z": claimed["inf"]}
        for k in got:
            ctx.require(got[k] == want[k], f"cycle type of {k} is {got[k]}, expected {want[k]}")
        return got

    def product_one():
        ctx.require((x * y * z).is_identity(), "x * y * z is not the identity")
        return {"composition": c.composition, "y": "x^-1 * z^-1"}

    def transitive():
        orb = orbits([x, z], x.degree)
        ctx.require(len(orb) == 1, f"<x, z> has {len(orb)} orbits on {x.degree} points")
        return {"degree": x.degree, "orbits": 1}

    def wreath():
        systems = minimal_blocks([x, z])
        two = [s for s in systems if len(s) == 2]
        ctx.require(len(two) >= 1, "no block system with 2 blocks")
        sizes = sorted(len(b) for b in two[0])
        ctx.require(sizes == [36, 36], f"block sizes {sizes}, expected 36 + 36")
        order = StabilizerChain([x, z], seed=ctx.config.seed).order()
        bound = 2 * ORDER ** 2
        ctx.require(bound % order == 0, f"group order {order} does not divide 2 |G|^2")
        return {"nontrivial_block_systems": len(systems), "block_sizes": sizes,
                "order": order, "wreath_order": bound, "equal": order == bound}

    return {"triple.cycle-types": cycle_types, "triple.product-one": product_one,
            "triple.transitive": transitive, "triple.wreath": wreath}


def stage_sp62_census(ctx: Context) -> dict[str, Callable[[], Any]]:
    if ctx.model is None:
        ctx.model = SymplecticModel(seed=ctx.config.seed)
    model = ctx.model
    want_order = int(ctx.consts.claimed["group_order"])

    def order():
        got = model.chain63.order()
        ctx.require(got == want_order, f"order on 63 points is {got}, expected {want_order}")
        return {"order": got, "generators": len(model.matrices),
                "transversal_sizes": model.chain63.transversal_sizes()}

    def forms():
        sizes = sorted(len(o) for o in form_orbits(model.matrices))
        ctx.require(sizes == [28, 36], f"form orbit sizes {sizes}, expected [28, 36]")
        return {"orbit_sizes": sizes}

    def faithful36():
        got = model.chain36.order()
        ctx.require(got == want_order, f"order on 36 points is {got}, expected {want_order}")
        return {"order": got}

    def unique_types():
        census = model.census
        types = [CycleType.parse(s) for s in ctx.consts.claimed["class_types"]]
        ctx.class_vector = locate_class_vector(census, types)
        return {"classes": len(census.classes),
                "class_vector": [{"type": cl.cycle_type, "size": cl.size,
                                  "element_order": cl.element_order, "label": cl.label}
                                 for cl in ctx.class_vector],
                "table": [[str(cl.cycle_type), cl.size, cl.element_order]
                          for cl in census.classes]}

    def total():
        census = model.census
        s = sum(cl.size for cl in census.classes)
        ctx.require(s == want_order, f"class sizes sum to {s}, expected {want_order}")
        return {"sum": s}

    def two_transitive():
        fix1, fix2 = model.fix_statistics()
        ctx.require(fix1 == ORDER, f"sum fix = {fix1}, expected |G| (transitive)")
        ctx.require(fix2 == 2 * ORDER, f"sum fix^2 = {fix2}, expected 2 |G|")
        return {"sum_fix": fix1, "sum_fix_squared": fix2}

    def rational():
        ctx.require(ctx.class_vector is not None, "class vector not located")
        out = {}
        for cl in ctx.class_vector:
            ok = rational_class_check(model.census, cl)
            ctx.require(ok, f"class of type {cl.cycle_type} is not rational")
            out[str(cl.cycle_type)] = ok
        return out

    return {"group.order": order, "group.forms": forms, "group.faithful36": faithful36,
            "census.unique-types": unique_types, "census.total": total,
            "census.two-transitive": two_transitive, "census.rational-classes": rational}


def stage_nielsen(ctx: Context) -> dict[str, Callable[[], Any]]:
    state: dict[str, Any] = {}

    def vector():
        cv = ctx.class_vector
        ctx.require(cv is not None, "class vector not located")
        return [cv[0], cv[1], cv[1], cv[2]]

    def length():
        classes = vector()
        nctx = NielsenContext(ctx.model.census, classes[0])
        res = count_tuples(nctx, classes)
        state.update(ctx=nctx, res=res)
        for rep in res.representatives:
            validate_tuple(nctx, rep.entries, classes)
        want = Fraction(ctx.consts.claimed["nielsen_length"])
        ctx.require(res.length == want, f"Nielsen class length {res.length}, expected {want}")
        return {"raw_tuples": res.raw, "generating_tuples": res.generating,
                "centralizer_order": len(nctx.centralizer), "length": res.length,
                "orbit_sizes": res.orbit_sizes,
                "non_generating_classes": len(res.non_generating),
                "representatives": [r.to_cycles() for r in res.representatives]}

    def centralizer():
        ctx.require("res" in state, "Nielsen count unavailable")
        orders = [state["ctx"].tuple_centralizer_order(r) for r in state["res"].representatives]
        ctx.require(all(o == 1 for o in orders), f"tuple centralizer orders {orders}")
        return {"tuple_centralizer_orders": orders}

    def braid():
        ctx.require("res" in state, "Nielsen count unavailable")
        parts, info = braid_orbits(state["ctx"], state["res"].representatives)
        ctx.require(len(parts) == 1, f"{len(parts)} braid orbits: {parts}")
        return {"orbits": parts, **info}

    return {"nielsen.length": length, "nielsen.centralizer": centralizer,
            "nielsen.braid-orbit": braid}


def stage_belyi(ctx: Context) -> dict[str, Callable[[], Any]]:
    c = ctx.consts
    p, q = c.belyi_p.expand_uni(), c.belyi_q.expand_uni()
    claimed = ctx.claimed_types("belyi_types")
    state: dict[str, Any] = {}

    def profile():
        prof = verify_belyi(p, q, c.belyi_scale)
        state["prof"] = prof
        for pt, ct in claimed.items():
            ctx.require(prof.fibers[pt] == ct, f"fiber over {pt} is {prof.fibers[pt]}, expected {ct}")
        return {"degree": prof.degree, "fibers": prof.as_dict(), "scale": c.belyi_scale}

    def riemann_hurwitz():
        ctx.require("prof" in state, "profile unavailable")
        prof = state["prof"]
        total = prof.riemann_hurwitz()
        ctx.require(total == 2 * prof.degree - 2, f"ramification total {total}")
        return {"total": total, "genus": prof.genus()}

    def square_root():
        w = verify_square_root_structure(p, q, c.belyi_scale)
        return {"scale_root": w["scale_root"],
                "p_root_degree": int(w["p_root"].degree), "q_root_degree": int(w["q_root"].degree),
                "p_root_multiplicities": [m for _, m in w["p_root_factors"]],
                "q_root_multiplicities": [m for _, m in w["q_root_factors"]]}

    def monodromy_match():
        ctx.require("prof" in state, "profile unavailable")
        got = state["prof"].fibers
        perms = {"0": c.x, "1": c.y, "inf": c.z}
        for pt, g in perms.items():
            ctx.require(cycle_type(g) == got[pt],
                        f"fiber over {pt} is {got[pt]} but the triple has {cycle_type(g)}")
        return {pt: cycle_type(g) for pt, g in perms.items()}

    return {"belyi.profile": profile, "belyi.riemann-hurwitz": riemann_hurwitz,
            "belyi.square-root": square_root, "belyi.monodromy-match": monodromy_match}


def stage_family(ctx: Context) -> dict[str, Callable[[], Any]]:
    c = ctx.consts
    P, Q = c.family_p.expand_bi(), c.family_q.expand_bi()
    claimed = ctx.claimed_types("family_types")
    state: dict[str, Any] = {}

    def delta():
        res = verify_delta(P, Q, c.delta, ctx.config.a0)
        state["delta"] = res
        return {K.format_rational(a): {"degree_t": int(d.degree),
                                       "t_order": next(i for i, v in enumerate(d.coeffs) if v)}
                for a, d in res.items()}

    def branch_data():
        out = {}
        for a0 in ctx.config.a0:
            prof, wit = verify_family_branch_data(P, Q, a0, state.get("delta", {}).get(Fraction(a0)))
            for pt, ct in claimed.items():
                ctx.require(prof.fibers.get(pt) == ct,
                            f"a = {a0}: fiber over {pt} is {prof.fibers.get(pt)}, expected {ct}")
            out[K.format_rational(a0)] = {
                "fibers": prof.as_dict(), "total": prof.riemann_hurwitz(),
                "split_prime": wit["prime"], "roots_mod_p": wit["roots_mod_p"],
                "branch_factor": wit["branch_factor"],
                "branch_factor_multiplicity": wit["branch_factor_multiplicity"]}
        state["branch"] = out
        return out

    def four_points():
        ctx.require("branch" in state, "branch data unavailable")
        out = {}
        for a, entry in state["branch"].items():
            pts = sorted(entry["fibers"])
            ramified = [pt for pt in pts if CycleType.parse(entry["fibers"][pt]).counts.get(1, 0) != 36]
            ctx.require(len(ramified) == 4, f"a = {a}: {len(ramified)} branch points")
            ctx.require(entry["total"] == 70, f"a = {a}: ramification total {entry['total']}")
            out[a] = {"branch_points": ramified, "total": entry["total"]}
        return out

    def class_vector_match():
        if ctx.class_vector is not None:
            cv = ctx.class_vector
            ref = {"0": cv[0].cycle_type, "r1": cv[1].cycle_type,
                   "r2": cv[1].cycle_type, "inf": cv[2].cycle_type}
            source = "census"
        else:
            types = [CycleType.parse(s) for s in c.claimed["class_types"]]
            ref = {"0": types[0], "r1": types[1], "r2": types[1], "inf": types[2]}
            source = "claimed"
        for pt, ct in ref.items():
            ctx.require(claimed[pt] == ct, f"fiber type over {pt} is not the class type {ct}")
        return {"reference": source, "types": ref}

    return {"family.delta": delta, "family.branch-data": branch_data,
            "family.four-branch-points": four_points,
            "family.class-vector-match": class_vector_match}


def _cited(cid: str) -> Callable[[], Any]:
    return lambda: {"computed": False, "note": C.CLAIMS[cid].check}


def stage_dedekind(ctx: Context) -> dict[str, Callable[[], Any]]:
    c = ctx.consts
    cfg = ctx.config
    state: dict[str, Any] = {}

    def pencil() -> Pencil:
        if ctx.pencil is None:
            P, Q = c.family_p.expand_bi(), c.family_q.expand_bi()
            ctx.pencil = Pencil(P.specialize(1), Q.specialize(1))
        return ctx.pencil

    def frobenius_types():
        fam = pencil()
        primes = cfg.primes if cfg.primes is not None else default_primes(fam, DEFAULT_PRIME_COUNT)
        records = sample_frobenius(fam, primes, cfg.samples_per_prime, cfg.seed,
                                   good_prime=fam.good_prime)
        types = ctx.model.census.cycle_types() if ctx.model is not None else None
        ctx.require(types is not None, "census types unavailable")
        summ = statistics(records, types, cfg.tolerance_fix, cfg.tolerance_fix2)
        state["summary"] = summ
        ctx.require(summ.unknown_type_count == 0,
                    f"{summ.unknown_type_count} Frobenius patterns outside the census: "
                    f"{', '.join(summ.unknown_types[:5])}")
        ctx.require(summ.distinct_types >= MIN_DISTINCT_TYPES,
                    f"only {summ.distinct_types} distinct types observed")
        return {"primes": primes, "samples": summ.samples,
                "rejected": sum(1 for r in records if not r.accepted),
                "distinct_types": summ.distinct_types,
                "unknown_type_count": summ.unknown_type_count,
                "records": [[r.p, r.t0, r.pattern if r.accepted else None] for r in records]}

    def two_transitive():
        ctx.require("summary" in state, "Frobenius statistics unavailable")
        s = state["summary"]
        ctx.require(s.transitive_ok, f"mean fix {s.mean_fix:.4f} outside 1 +- {s.tol_fix}")
        ctx.require(s.two_transitive_ok,
                    f"mean fix^2 {s.mean_fix_squared:.4f} outside 2 +- {s.tol_fix2}")
        return {"mean_fix": s.mean_fix, "mean_fix_squared": s.mean_fix_squared,
                "tolerance_fix": s.tol_fix, "tolerance_fix2": s.tol_fix2,
                "evidence_not_proof": True}

    def square_disc():
        prime = int(c.claimed["reduction_prime"])
        exps = c.delta.exponents()
        ctx.require(printed_exponents_even(exps), f"odd exponent among {exps}")
        chk = square_disc_check(c.delta.at(1), prime)
        ctx.require(chk.rational_square, "disc(1, t) is not a square in Q(t)")
        ctx.require(chk.reduction_square, f"disc(1, t) mod {prime} is not a square in F_{prime}(t)")
        return {"exponents": exps, "prime": prime,
                "multiplicities": {m: d for m, d in sorted(chk.multiplicities.items())}}

    def index63():
        ctx.require(ctx.model is not None, "group model unavailable")
        res = index63_consequences(ctx.model, alt_range=())
        state["index63"] = res
        ctx.require(res["stabilizer_index"] == int(c.claimed["resolvent_degree"]),
                    f"stabilizer index {res['stabilizer_index']}")
        return {k: res[k] for k in ("stabilizer_index", "stabilizer_order", "divisors")}

    def alternating():
        from .perm import min_faithful_degree_check
        out = {}
        for n in (5, 6, 7):
            r = min_faithful_degree_check(n)
            ctx.require(r["min_index"] == n, f"A_{n} minimal index {r['min_index']}")
            out[f"A{n}"] = {"order": r["order"], "min_index": r["min_index"],
                            "simple": r["simple"], "classes": r["classes"]}
        return out

    checks = {"dedekind.frobenius-types": frobenius_types,
              "dedekind.two-transitive": two_transitive,
              "dedekind.square-disc": square_disc,
              "dedekind.index63": index63,
              "dedekind.alternating-min-index": alternating}
    for cl in C.stage_claims("dedekind"):
        if cl.kind == C.CITED:
            checks[cl.id] = _cited(cl.id)
    return checks


STAGE_FUNCS = {
    "perm-triple": stage_perm_triple,
    "sp62-census": stage_sp62_census,
    "nielsen": stage_nielsen,
    "belyi": stage_belyi,
    "family": stage_family,
    "dedekind": stage_dedekind,
}


# ---------------------------------------------------------------------------
# running

def _run_claim(cid: str, fn: Callable[[], Any], timings: bool) -> dict:
    claim = C.CLAIMS[cid]
    entry: dict[str, Any] = {"id": cid, "claim": claim.anchor, "check": claim.check}
    start = time.perf_counter()
    try:
        witness = fn()
        entry["status"] = claim.kind
        entry["witness"] = jsonable(witness)
    except Exception as exc:  # any failure is recorded, not propagated
        entry["status"] = C.FAILED
        entry["diagnostic"] = f"{type(exc).__name__}: {exc}"
    if timings:
        entry["wall_time"] = round(time.perf_counter() - start, 3)
    return entry


def run_stage(name: str, ctx: Context) -> dict:
    start = time.perf_counter()
    try:
        checks = STAGE_FUNCS[name](ctx)
        entries = [_run_claim(cid, checks[cid], ctx.config.timings)
                   for cid in (cl.id for cl in C.stage_claims(name))]
    except Exception as exc:
        entries = [{"id": f"{name}.setup", "claim": "stage setup", "check": "stage setup",
                    "status": C.FAILED, "diagnostic": f"{type(exc).__name__}: {exc}"}]
    stage = {"name": name,
             "status": C.FAILED if any(e["status"] == C.FAILED for e in entries) else "passed",
             "claims": entries}
    if ctx.config.timings:
        stage["wall_time"] = round(time.perf_counter() - start, 3)
    return stage


def run(config: Config, consts: K.Constants | None = None,
        context_hook: Callable[[Context], None] | None = None) -> dict:
    """Run the requested stages (plus prerequisites) and return the report.

    Raises ``ConstantsError`` if the constants file does not parse and
    ``KeyError`` for an unknown stage.
    """
    stages = C.resolve_stages(config.stages)
    if consts is None:
        consts = K.load(config.constants)
    ctx = Context(config, consts)
    if context_hook is not None:
        context_hook(ctx)
    results = [run_stage(s, ctx) for s in stages]
    counts = {s: 0 for s in C.STATUSES}
    for st in results:
        for e in st["claims"]:
            counts[e["status"]] += 1
    failed = any(st["status"] == C.FAILED for st in results)
    return {
        "format": REPORT_FORMAT,
        "config": config.as_dict(),
        "constants_sha256": hashlib.sha256(consts.dumps().encode("utf-8")).hexdigest(),
        "stages_run": stages,
        "stages": results,
        "status_counts": counts,
        "overall": C.FAILED if failed else "verified",
    }


def dumps_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def summary_lines(report: dict) -> list[str]:
    out = []
    for st in report["stages"]:
        out.append(f"[{st['status']}] stage {st['name']}")
        for e in st["claims"]:
            line = f"    {e['status']:<21} {e['id']}"
            if "diagnostic" in e:
                line += f"  -- {e['diagnostic']}"
            out.append(line)
    out.append(f"overall: {report['overall']}")
    return out
