"""The algebraic curve containing the D-decomposition border.

``h(r, p)`` is the square-free product of the resultant ``Res_w(R, I)`` and
the leading-coefficient locus of the continuous-time family.
"""

from dataclasses import dataclass

from .errors import CommonFactorError, DegenerateFamilyError
from .family import W, continuous_form, leading_component, split_re_im
from .mpoly import MPoly, gcd, resultant, squarefree_part

RESULTANT = "resultant"
LEADING = "leading"


@dataclass(frozen=True)
class BorderCurve:
    h: MPoly
    components: tuple  # ((source, MPoly), ...)

    @property
    def degree(self):
        return max(self.h.degree(), 0)

    def is_empty(self):
        return self.h.is_constant()


def check_coprime(sp):
    """True iff ``gcd(R, I)`` taken in ``w`` does not involve ``w``."""
    R, I = sp.R, sp.I
    if not R and not I:
        raise DegenerateFamilyError("P(jw, r, p) vanishes identically")
    if R and I and (not R.depends_on(W) or not I.depends_on(W)):
        return True
    return not gcd(R, I, W).depends_on(W)


def _coprimality_error():
    return CommonFactorError(
        "coprimality hypothesis violated: Re P(jw, r, p) and Im P(jw, r, p) "
        "share a common divisor depending on w, so the border is not "
        "contained in a plane curve")


def border_curve(f):
    """Square-free curve ``h(r, p) = 0`` containing the border of ``f``."""
    fc = continuous_form(f)
    params = tuple(fc.param_names)
    sp = split_re_im(fc)
    if not check_coprime(sp):
        raise _coprimality_error()
    R, I = sp.R, sp.I
    if not R.depends_on(W) and not I.depends_on(W):
        # P(jw) independent of w cannot happen for deg_s >= 1
        raise DegenerateFamilyError("P(jw, r, p) does not depend on w")
    res = resultant(R, I, W).with_vars((W,) + params).with_vars(params)
    if not res:
        raise _coprimality_error()
    components = []
    factors = []
    if not res.is_constant():
        rc = squarefree_part(res, params[1])
        components.append((RESULTANT, rc))
        factors.append(rc)
    lead = leading_component(fc)
    if not lead.is_constant():
        lc = squarefree_part(lead, params[1])
        components.append((LEADING, lc))
        factors.append(lc)
    h = MPoly.const(1, params)
    for x in factors:
        h = h * x
    if len(factors) > 1:
        h = squarefree_part(h, params[1])
    return BorderCurve(h.normalize(), tuple(components))
