"""Registry of named verification suites.

A suite is run per unit (suite, N[, k]); units are independent so the CLI
can farm them out to worker processes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .checks import CheckResult


def _webrel(N, k):
    from .relations import webrel_checks
    return webrel_checks(N)


def _reid(N, k):
    from .relations import reid_checks
    return reid_checks(N)


def _tm(N, k):
    from .projectors import tm_checks
    return tm_checks(N)


def _clasps(N, k):
    from .projectors import clasp_checks
    return clasp_checks(N)


def _spanning(N, k):
    from .projectors import spanning_checks
    return spanning_checks(N, 3 if N <= 3 else 2)


def _end2(N, k):
    from .end2 import end2_checks
    return end2_checks(N)


def _newton(N, k):
    from .newton import kN_remark_checks, newton_checks
    out = newton_checks(N, k)
    return out + kN_remark_checks(N) if k == 2 else out


def _chars(N, k):
    from .symfun import chars_checks
    return chars_checks(N)


def _ess(N, k):
    from .annular import essential_checks
    return essential_checks(N)


def _annular(N, k):
    from .annular import annular_checks
    return annular_checks(N)


def _gl2rel(N, k):
    from .gl2 import gl2rel_checks
    return gl2rel_checks()


def _gl2ptr(N, k):
    from .gl2 import gl2ptr_checks
    return gl2ptr_checks()


def _gl2emn(N, k):
    from .gl2 import gl2emn_checks
    return gl2emn_checks()


def _gl2skel(N, k):
    from .gl2 import gl2skel_checks
    return gl2skel_checks()


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[[int, int | None], list[CheckResult]]
    description: str
    n_values: tuple = (2, 3, 4)      # N used when none is given
    n_allowed: Callable[[int], bool] = lambda N: N >= 2
    k_values: tuple | None = None    # only suites indexed by k

    def units(self, Ns=None, ks=None) -> list[tuple[str, int, int | None]]:
        Ns = self.n_values if Ns is None else [N for N in Ns if self.n_allowed(N)]
        if self.k_values is None:
            return [(self.name, N, None) for N in Ns]
        ks = self.k_values if ks is None else ks
        return [(self.name, N, k) for N in Ns for k in ks if k >= 2]


_only2 = lambda N: N == 2  # noqa: E731

SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("webrel", _webrel, "planar web relations at generic q"),
    Suite("reid", _reid, "Reidemeister moves and fork slides at generic q", (2, 3)),
    Suite("ess", _ess, "essential circles and D^N on one strand", (2, 3, 4, 5, 6)),
    Suite("annular", _annular, "cap slides and wraps against the global rotation", (2, 3)),
    Suite("tm", _tm, "extremal weight projectors T_m"),
    Suite("clasps", _clasps, "clasps, orbit and partition idempotents, lambda shifts"),
    Suite("spanning", _spanning, "rank of the spanning set against the weight-space count", (2, 3)),
    Suite("end2", _end2, "endomorphisms of the 2-strand and of two 1-strands", (2, 3, 4, 5)),
    Suite("newton", _newton, "zig-zag isomorphism between clasp/projector summands", (2, 3),
          k_values=(2, 3, 4)),
    Suite("chars", _chars, "characters of idempotents as symmetric polynomials"),
    Suite("gl2rel", _gl2rel, "rank-two circles, bigons and squares at generic q", (2,), _only2),
    Suite("gl2ptr", _gl2ptr, "partial trace calibration and T_m partial traces", (2,), _only2),
    Suite("gl2emn", _gl2emn, "the idempotents e_{m,n} and their isomorphisms", (2,), _only2),
    Suite("gl2skel", _gl2skel, "skeleton endomorphism and hom dimensions", (2,), _only2),
]}


def expand(name: str, Ns=None, ks=None) -> list[tuple[str, int, int | None]]:
    if name == "all":
        return [u for s in SUITES.values() for u in s.units(Ns, ks)]
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name].units(Ns, ks)


def run_unit(unit: tuple[str, int, int | None]) -> list[CheckResult]:
    name, N, k = unit
    return SUITES[name].run(N, k)
