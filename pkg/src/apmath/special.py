"""Gamma, Pochhammer's symbol and the Riemann zeta function at integers.

Gamma is reduced to arguments near 1 and summed from the series of
``log Gamma(1 + z)`` in powers of ``z`` with ``zeta(k) - 1`` coefficients.
Zeta uses the Bernoulli closed form at even arguments, Broadhurst ladders
for 3 and 5, and Cohen's rapidly converging sums for larger odd arguments.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction

from .constants import bbp_ladder, euler_gamma, pi
from .core import (
    EST,
    ONE,
    ZERO,
    as_decimal,
    as_spec,
    context,
    divide,
    divide_round,
    err2prec,
    estimate,
    exact,
    exponent,
    guarded,
    jint,
    multiply_round,
    pow_round,
    precision,
    round_to,
    scale_prec,
    ulp_estimate,
)
from .elementary import exp, log
from .errors import DomainError, PoleError
from .rational import to_decimal
from .sequences import bernoulli, factorial

__all__ = ["ZMIN1", "cohen_epsilon", "gamma", "pochhammer", "zeta", "zeta1"]

# ZETA5_DIVISOR is checked against ZMIN1[5] in the test suite.
ZETA5_DIVISOR = 62651

ZMIN1 = (
    0.0,
    0.0,
    6.449340668482264364724151666e-01,
    2.020569031595942853997381615e-01,
    8.232323371113819151600369654e-02,
    3.692775514336992633136548646e-02,
    1.734306198444913971451792979e-02,
    8.349277381922826839797549850e-03,
    4.077356197944339378685238509e-03,
    2.008392826082214417852769232e-03,
    9.945751278180853371459589003e-04,
    4.941886041194645587022825265e-04,
    2.460865533080482986379980477e-04,
    1.227133475784891467518365264e-04,
    6.124813505870482925854510514e-05,
    3.058823630702049355172851064e-05,
    1.528225940865187173257148764e-05,
    7.637197637899762273600293563e-06,
    3.817293264999839856461644622e-06,
    1.908212716553938925656957795e-06,
    9.539620338727961131520386834e-07,
    4.769329867878064631167196044e-07,
    2.384505027277329900036481868e-07,
    1.192199259653110730677887189e-07,
    5.960818905125947961244020794e-08,
    2.980350351465228018606370507e-08,
    1.490155482836504123465850663e-08,
    7.450711789835429491981004171e-09,
    3.725334024788457054819204018e-09,
    1.862659723513049006403909945e-09,
    9.313274324196681828717647350e-10,
    4.656629065033784072989233251e-10,
    2.328311833676505492001455976e-10,
    1.164155017270051977592973835e-10,
    5.820772087902700889243685989e-11,
    2.910385044497099686929425228e-11,
    1.455192189104198423592963225e-11,
    7.275959835057481014520869012e-12,
    3.637979547378651190237236356e-12,
    1.818989650307065947584832101e-12,
    9.094947840263889282533118387e-13,
    4.547473783042154026799112029e-13,
    2.273736845824652515226821578e-13,
    1.136868407680227849349104838e-13,
    5.684341987627585609277182968e-14,
    2.842170976889301855455073705e-14,
    1.421085482803160676983430714e-14,
    7.105427395210852712877354480e-15,
    3.552713691337113673298469534e-15,
    1.776356843579120327473349014e-15,
    8.881784210930815903096091386e-16,
    4.440892103143813364197770940e-16,
    2.220446050798041983999320094e-16,
    1.110223025141066133720544570e-16,
    5.551115124845481243723736590e-17,
    2.775557562136124172581632454e-17,
    1.387778780972523276283909491e-17,
    6.938893904544153697446085326e-18,
    3.469446952165922624744271496e-18,
    1.734723476047576572048972970e-18,
    8.673617380119933728342055067e-19,
    4.336808690020650487497023566e-19,
    2.168404344997219785013910168e-19,
    1.084202172494241406301271117e-19,
    5.421010862456645410918700404e-20,
    2.710505431223468831954621312e-20,
    1.355252715610116458148523400e-20,
    6.776263578045189097995298742e-21,
    3.388131789020796818085703100e-21,
    1.694065894509799165406492747e-21,
    8.470329472546998348246992609e-22,
    4.235164736272833347862270483e-22,
    2.117582368136194731844209440e-22,
    1.058791184068023385226500154e-22,
    5.293955920339870323813912303e-23,
    2.646977960169852961134116684e-23,
    1.323488980084899080309451025e-23,
    6.617444900424404067355245332e-24,
    3.308722450212171588946956384e-24,
    1.654361225106075646229923677e-24,
    8.271806125530344403671105617e-25,
    4.135903062765160926009382456e-25,
    2.067951531382576704395967919e-25,
    1.033975765691287099328409559e-25,
    5.169878828456431320410133217e-26,
    2.584939414228214268127761771e-26,
    1.292469707114106670038112612e-26,
    6.462348535570531803438002161e-27,
    3.231174267785265386134814118e-27,
    1.615587133892632521206011406e-27,
    8.077935669463162033158738186e-28,
    4.038967834731580825622262813e-28,
    2.019483917365790349158762647e-28,
    1.009741958682895153361925070e-28,
    5.048709793414475696084771173e-29,
    2.524354896707237824467434194e-29,
    1.262177448353618904375399966e-29,
    6.310887241768094495682609390e-30,
    3.155443620884047239109841220e-30,
    1.577721810442023616644432780e-30,
    7.888609052210118073520537800e-31,
)
"""``ZMIN1[n] == zeta(n) - 1`` in double precision for ``2 <= n <= 100``."""


@exact
def pochhammer(x, n: int) -> Decimal:
    """Rising factorial ``x (x+1) ... (x+n-1)`` with two guard digits."""
    x = as_decimal(x)
    if n < 0:
        raise DomainError(f"Unimplemented pochhammer with negative index {n}")
    if n == 0:
        return ONE
    if x <= 0 and x == x.to_integral_value() and -x < n:
        # One factor is an exact zero.
        return Decimal((0, (0,), exponent(x)))

    xh = scale_prec(x, 2)
    x_est = estimate(x)
    x_ulp = ulp_estimate(x)
    # The relative error is the sum of those of the factors.
    eps = 0.5 * x_ulp / abs(x_est)
    result = xh
    for i in range(1, n):
        eps += 0.5 * x_ulp / abs(x_est + i)
        result *= xh + i
        result = round_to(result, 4 + err2prec(eps))
    return round_to(result, err2prec(eps))


def _is_pole(x: Decimal) -> bool:
    return x <= 0 and x == x.to_integral_value()


@exact
def gamma(x) -> Decimal:
    """Euler's Gamma function.

    Negative arguments climb with ``Gamma(x) = Gamma(x+1) / x``, arguments
    above 1.5 descend with Pochhammer's symbol, and the remaining ones use
    ``log Gamma(1+z) = -log(1+z) + z (1 - gamma) + sum (-1)**k (zeta(k) - 1) z**k / k``.
    """
    x = as_decimal(x)
    if _is_pole(x):
        raise PoleError(f"Gamma has a pole at {x}")
    return guarded(_gamma, x)


def _gamma(x: Decimal) -> Decimal:
    if x < 0:
        # Iterative form of Gamma(x) = Gamma(x+1) / x.
        shifts = []
        while x < 0:
            shifts.append(x)
            x += 1
        result = _gamma(x)
        for xi in reversed(shifts):
            result = divide_round(result, xi)
        return result

    x_est = estimate(x)
    if x_est > 1.5:
        n = jint(x_est - 0.5)
        xmin = x - n
        return multiply_round(_gamma(xmin), pochhammer(xmin, n))

    z = scale_prec(x - ONE, 2)
    inner = precision(z)
    eps = ulp_estimate(x) / x_est
    result = -log(scale_prec(x, 2))
    if x != ONE:
        z_est = estimate(z)
        z_ulp = ulp_estimate(z)
        result += multiply_round(z, ONE - euler_gamma(inner))
        n = 2
        while True:
            c = divide_round(context(inner).power(z, n), n)
            c = round_to(c, err2prec(n * z_ulp / 2 / z_est))
            # zeta(n) - 1 only needs the relative accuracy of this term.
            rel = eps / 100 / estimate(c)
            digits = err2prec(rel) if abs(rel) < 0.01 else 2
            c = multiply_round(c, zeta(n, digits) - ONE)
            if n % 2 == 0:
                result += c
            else:
                result -= c
            if abs(estimate(c)) < eps:
                break
            n += 1

    # The relative error of the result is err(x) times the digamma function.
    z_dbl = estimate(z)
    psi = EST.mpf(0.5772156649)
    for n in range(1, 5):
        psi += z_dbl / n / (n + z_dbl)
    eps = psi * ulp_estimate(x) / 2
    return round_to(exp(result), err2prec(eps))


def cohen_epsilon(n: int) -> Fraction:
    """Correction factor in Cohen's sum: 0 if ``n % 4 == 3``, else ``2/(n-1)``."""
    return Fraction(0) if n % 4 == 3 else Fraction(2, n - 1)


def _cohen_prefactor(n: int) -> Fraction:
    """Rational ``r`` with ``(2 pi)**n r`` the leading part of ``zeta(n)``."""
    betsum = Fraction(0)
    for npr in range(0, (n + 1) // 2 + 1):
        b = bernoulli(2 * npr) * bernoulli(n + 1 - 2 * npr)
        b = b / factorial(2 * npr) / factorial(n + 1 - 2 * npr) * (1 - 2 * npr)
        if npr % 2 == 0:
            betsum += b
        else:
            betsum -= b
    return betsum / (n - 1)


@exact
def zeta(n: int, spec) -> Decimal:
    """Riemann zeta function at an integer ``n >= 2``."""
    spec = as_spec(spec)
    digits = spec.digits
    if n <= 0:
        raise DomainError(f"Unimplemented zeta at negative argument {n}")
    if n == 1:
        raise PoleError("Pole at zeta(1)")

    if n % 2 == 0:
        # pi**n 2**(n-1) |B_n| / n!
        b = abs(bernoulli(n)) / factorial(n) * (1 << (n - 1))
        pi_digits = digits + jint(EST.log10(10 * n))
        piton = spec.context.power(pi(pi_digits), n)
        return multiply_round(piton, b)

    if n == 3:
        s31 = bbp_ladder(3, 1, (1, -7, -1, 10, -1, -7, 1, 0), spec)
        s33 = bbp_ladder(3, 3, (1, 1, -1, -2, -1, 1, 1, 0), spec)
        return spec.context.divide(s31 * 48 + s33 * 32, 7)

    if n == 5:
        s51 = bbp_ladder(5, 1, (31, -1614, -31, -6212, -31, -1614, 31, 74552), digits + 2)
        s53 = bbp_ladder(5, 3, (173, 284, -173, -457, -173, 284, 173, -111), digits + 2)
        s55 = bbp_ladder(5, 5, (1, 0, -1, -1, -1, 0, 1, 1), digits + 1)
        total = s51 * 18432 + s53 * 14336 - s55 * 1511424
        return spec.context.divide(total, ZETA5_DIVISOR)

    return _zeta_cohen(n, spec)


def _zeta_cohen(n: int, spec) -> Decimal:
    """Odd ``n >= 7``: ``(2 pi)**n r - 2 sum_k (1 + eps_n 2 pi k / (1 - e**(-2 pi k))) / (k**n (e**(2 pi k) - 1))``."""
    digits = spec.digits
    inner = 2 + digits + jint(EST.log10(n))
    ftrm = (pi(inner) * 2) ** n
    ftrm = multiply_round(ftrm, to_decimal(_cohen_prefactor(n), inner))

    eps = EST.mpf(10) ** -digits
    # Terms fall like exp(-2 pi k), a factor 10**-2.73 per k.
    if n % 4 == 3:
        kmax = 1 + jint(digits / 2.7)
        eps /= kmax
        # 2/(e**(2 pi) - 1) moves by 0.0075 err(pi).
        exp2p = exp(pi(3 + err2prec(3.14, eps / 0.0075)) * 2)
        exps = divide_round(1, exp2p - ONE)
        for npr in range(2, kmax + 1):
            c = pow_round(exp2p, npr) - ONE
            c = multiply_round(c, npr**n)
            exps += divide_round(1, c)
    else:
        kmax = 1 + jint((1 + digits) / 2.7)
        eps /= kmax
        twop = pi(3 + err2prec(3.14, eps / 0.017)) * 2
        exp2p = exp(twop)
        exps = divide_round(1, exp2p - ONE)
        c = ONE - divide_round(1, exp2p)
        c = divide_round(twop, c) * 2
        c = divide_round(c, n - 1) + ONE
        exps = multiply_round(exps, c)
        for npr in range(2, kmax + 1):
            c = pow_round(exp2p, npr) - ONE
            c = multiply_round(c, npr**n)
            # Only the digits of twop survive the next division.
            d = ONE - divide_round(1, context(precision(twop) + 2).power(exp2p, npr))
            d = divide_round(twop, d) * (2 * npr)
            d = divide_round(d, n - 1) + ONE
            exps += divide_round(d, c)
    return spec.context.subtract(ftrm, exps * 2)


def zeta1(n: int) -> float:
    """``zeta(n) - 1`` in double precision; tabulated up to ``n = 100``."""
    if n <= 0:
        raise DomainError(f"Unimplemented zeta at negative argument {n}")
    if n == 1:
        raise PoleError("Pole at zeta(1)")
    if n < len(ZMIN1):
        return ZMIN1[n]
    # About 18 significant digits of a value near 2**-n.
    digits = err2prec(EST.mpf(1e-18) * EST.mpf(2) ** -n)
    return float(zeta(n, digits) - ONE)
