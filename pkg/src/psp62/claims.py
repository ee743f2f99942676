"""Registry of every checked claim: identifier, the mathematical statement it
anchors to, what is computed, and how the result is classified."""

from __future__ import annotations

from dataclasses import dataclass

EXACT = "verified-exact"
STATISTICAL = "verified-statistical"
CITED = "cited-theorem"
FAILED = "failed"
STATUSES = (EXACT, STATISTICAL, CITED, FAILED)


@dataclass(frozen=True)
class Claim:
    id: str
    stage: str
    anchor: str
    check: str
    kind: str


_CLAIMS = [
    # triple
    Claim("triple.cycle-types", "perm-triple",
          "The monodromy triple of the squared cover has types (6^12), (1^24.2^24), (2^6.4.8^7).",
          "Cycle types of the printed x and z and of y = x^-1 z^-1.", EXACT),
    Claim("triple.product-one", "perm-triple",
          "The triple satisfies xyz = 1.",
          "Left-to-right product of x, y, z is the identity.", EXACT),
    Claim("triple.transitive", "perm-triple",
          "The monodromy group of the squared cover is transitive on 72 points.",
          "Orbit computation for <x, z>.", EXACT),
    Claim("triple.wreath", "perm-triple",
          "The monodromy group lies in PSp6(2) wr C2 acting on 72 points.",
          "Block systems of <x, z> (a 2 x 36 system) and Schreier-Sims order dividing 2 |G|^2.", EXACT),
    # group model
    Claim("group.order", "sp62-census",
          "PSp6(2) = Sp6(2) has order 1451520.",
          "Schreier-Sims on the transvection generators acting on 63 nonzero vectors.", EXACT),
    Claim("group.forms", "sp62-census",
          "The 64 quadratic forms polarizing to the symplectic form split into orbits of sizes 36 and 28.",
          "Exhaustive polarization check and orbit computation on all 64 forms.", EXACT),
    Claim("group.faithful36", "sp62-census",
          "PSp6(2) embeds in S36 via the Arf-invariant-0 forms.",
          "Schreier-Sims order of the 36-point image equals 1451520.", EXACT),
    # census
    Claim("census.unique-types", "sp62-census",
          "The conjugacy classes C1, C2, C3 are unique of type (3^12), (1^12.2^12), (1^6.2.4^7).",
          "Full enumeration and conjugacy census of the degree-36 group.", EXACT),
    Claim("census.total", "sp62-census",
          "Class sizes add up to the group order.",
          "Sum of census class sizes.", EXACT),
    Claim("census.two-transitive", "sp62-census",
          "PSp6(2) is 2-transitive of permutation degree 36.",
          "Sum of fix(g)^2 over all elements equals 2 |G| (Burnside on ordered pairs).", EXACT),
    Claim("census.rational-classes", "sp62-census",
          "All classes in the class vector are rational.",
          "g^k lies in the class of g for every k coprime to the order of g.", EXACT),
    # nielsen
    Claim("nielsen.length", "nielsen",
          "The straight inner Nielsen class of (C1, C2, C2, C3) is of length 2.",
          "Count generating product-one tuples with s1 fixed; scale by |C1| / |G|.", EXACT),
    Claim("nielsen.centralizer", "nielsen",
          "Generating tuples have trivial centralizer, so each class has |G| tuples.",
          "Centralizer of each canonical representative inside C(s1).", EXACT),
    Claim("nielsen.braid-orbit", "nielsen",
          "The Nielsen class forms a single orbit under the braid group action.",
          "Closure of the canonical representatives under Q1, Q2, Q3 and inverses.", EXACT),
    # belyi
    Claim("belyi.profile", "belyi",
          "The squared cover -2^-4 3^-8 p(X)/q(X) is a Belyi map of types (6^12), (1^24.2^24), (2^6.4.8^7).",
          "Squarefree decompositions of p, p + 2^4 3^8 q and q, plus the point at infinity.", EXACT),
    Claim("belyi.riemann-hurwitz", "belyi",
          "The Belyi map has genus 0.",
          "Total ramification over 0, 1, oo equals 2 * 72 - 2 = 142.", EXACT),
    Claim("belyi.square-root", "belyi",
          "Taking the square root gives f ramified over 0, 1, -1, oo.",
          "p and q are squares in Q[X] and the scale is minus a rational square.", EXACT),
    Claim("belyi.monodromy-match", "belyi",
          "The ramification of the Belyi map matches the cycle types of the printed triple.",
          "Fiber types over 0, 1, oo equal the cycle types of x, y, z.", EXACT),
    # family
    Claim("family.delta", "family",
          "The discriminant of f is 2^732 3^168 (a - 1/512)^154 a^290 t^24 (t^2 + ...)^12.",
          "Interpolated disc_X(p - t q) at each a0 equals the printed closed form.", EXACT),
    Claim("family.branch-data", "family",
          "The branch cycle structure of f with respect to t is (3^12, 1^12.2^12, 1^12.2^12, 1^6.2.4^7).",
          "Fibers over t = 0, oo exactly and over r1, r2 modulo a split good prime.", EXACT),
    Claim("family.four-branch-points", "family",
          "f has exactly four branch points with respect to t.",
          "Roots of the discriminant in t plus t = oo; Riemann-Hurwitz total 70.", EXACT),
    Claim("family.class-vector-match", "family",
          "The family's branch cycle structure is the class vector of the census.",
          "Fiber types equal the census types of C1, C2, C2, C3.", EXACT),
    # dedekind
    Claim("dedekind.frobenius-types", "dedekind",
          "Dedekind reduction restricts the Galois group of f1 to PSp6(2), A36 or S36.",
          "Every sampled Frobenius factor pattern is a PSp6(2) cycle type.", STATISTICAL),
    Claim("dedekind.two-transitive", "dedekind",
          "The Galois group of f1 over F37(t) is 2-transitive of degree 36.",
          "Mean fixed points near 1 and mean squared fixed points near 2 over sampled Frobenius elements.",
          STATISTICAL),
    Claim("dedekind.square-disc", "dedekind",
          "The discriminants of f1 and of its reduction mod 37 are squares.",
          "Exponents of the printed discriminant are even; the computed disc(t) is a square over Q and mod 37.",
          EXACT),
    Claim("dedekind.index63", "dedekind",
          "PSp6(2) has a subgroup of index 63.",
          "Stabilizer of a nonzero vector in the transitive 63-point action.", EXACT),
    Claim("dedekind.alternating-min-index", "dedekind",
          "A_n has no proper subgroup of index below n (checked for n = 5, 6, 7).",
          "Normal closures of all class representatives are the whole group; |A_n| exceeds k! for k < n.",
          EXACT),
    # cited
    Claim("cited.malle", "dedekind",
          "Malle's theorem: the Galois groups over Q(a, t) and over Q(t) at a = 1 coincide.",
          "Not computed; the four-branch-point hypothesis at a = 1 is checked in family.branch-data.", CITED),
    Claim("cited.beckmann", "dedekind",
          "Beckmann's theorem: the Galois groups of f1 over Q(t) and over F37(t) coincide.",
          "Not computed; the square discriminants and reduction data are checked separately.", CITED),
    Claim("cited.a36-min-degree", "dedekind",
          "A36 has no proper subgroup of index dividing 63.",
          "Classical minimal-index theorem for A_n; only n = 5, 6, 7 are computed.", CITED),
    Claim("cited.index-lemma", "dedekind",
          "A resolvent splitting over the cover field forces a subgroup of index d > 1 dividing its degree.",
          "Field-theoretic proof not computed; the degree-63 resolvent is not available.", CITED),
    Claim("cited.function-field-irreducibility", "dedekind",
          "The degree-35 cofactor over F37(t) is irreducible (2-transitivity over F37(t)).",
          "Not computed; replaced by the Frobenius statistics in dedekind.two-transitive (evidence, not proof).",
          CITED),
]

CLAIMS: dict[str, Claim] = {c.id: c for c in _CLAIMS}

STAGES = ("perm-triple", "sp62-census", "nielsen", "belyi", "family", "dedekind")
DEPENDENCIES = {
    "perm-triple": (),
    "sp62-census": (),
    "nielsen": ("sp62-census",),
    "belyi": (),
    "family": (),
    "dedekind": ("sp62-census",),
}


def stage_claims(stage: str) -> list[Claim]:
    return [c for c in _CLAIMS if c.stage == stage]


def resolve_stages(requested) -> list[str]:
    """Requested stages plus prerequisites, in dependency order."""
    if "all" in requested:
        return list(STAGES)
    need: set[str] = set()

    def add(s):
        if s not in DEPENDENCIES:
            raise KeyError(f"unknown stage {s!r}; valid: {', '.join(STAGES)}, all")
        if s not in need:
            need.add(s)
            for d in DEPENDENCIES[s]:
                add(d)

    for s in requested:
        add(s)
    return [s for s in STAGES if s in need]


def explain(claim_id: str) -> str:
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim {claim_id!r}; valid ids: {', '.join(CLAIMS)}")
    c = CLAIMS[claim_id]
    return (f"{c.id} [{c.stage}]\n"
            f"  claim:  {c.anchor}\n"
            f"  check:  {c.check}\n"
            f"  status: {c.kind}\n")
