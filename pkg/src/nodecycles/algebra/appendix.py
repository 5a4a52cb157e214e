"""Transcribed polynomials R1, R2, H3, H31 and their published specializations."""

from __future__ import annotations

from functools import lru_cache

from .poly import ExactPoly

GAMMA = "γ"
NAMES = ("R1", "R2", "H3", "H31")


def _uvg():
    return ExactPoly.var("u"), ExactPoly.var("v"), ExactPoly.var(GAMMA)


def _r1() -> ExactPoly:
    u, v, _ = _uvg()
    return (
        -(u**6) * (u**2 + 1) * v**20
        - 3 * u**5 * (5 * u**4 - 2 * u**2 + 5) * v**19
        - 3 * u**4 * (u**2 + 1) * (16 * u**4 - 45 * u**2 + 16) * v**18
        - u**3 * (17 * u**8 + 594 * u**6 - 2526 * u**4 + 594 * u**2 + 17) * v**17
        + u**4 * (u**2 + 1) * (53 * u**2 + 14 * u - 53) * (53 * u**2 - 14 * u - 53) * v**16
        + 12 * u**3 * (4 * u**8 + 3773 * u**6 - 8726 * u**4 + 3773 * u**2 + 4) * v**15
        - u**2 * (u**2 + 1) * (428 * u**8 - 17291 * u**6 + 41082 * u**4 - 17291 * u**2 + 428) * v**14
        + u * (17 * u**12 - 14970 * u**10 - 472783 * u**8 + 931608 * u**6 - 472783 * u**4
               - 14970 * u**2 + 17) * v**13
        - u**2 * (u**2 + 1) * (7713 * u**8 + 948069 * u**6 - 1882520 * u**4 + 948069 * u**2 + 7713) * v**12
        - u * (105 * u**12 + 397793 * u**10 + 1044840 * u**8 - 2824512 * u**6 + 1044840 * u**4
               + 397793 * u**2 + 105) * v**11
        + (u**2 + 1) * (17 * u**12 - 55874 * u**10 - 1803982 * u**8 + 3675182 * u**6 - 1803982 * u**4
                        - 55874 * u**2 + 17) * v**10
        - u * (105 * u**12 + 397793 * u**10 + 1044840 * u**8 - 2824512 * u**6 + 1044840 * u**4
               + 397793 * u**2 + 105) * v**9
        - u**2 * (u**2 + 1) * (7713 * u**8 + 948069 * u**6 - 1882520 * u**4 + 948069 * u**2 + 7713) * v**8
        + u * (17 * u**12 - 14970 * u**10 - 472783 * u**8 + 931608 * u**6 - 472783 * u**4
               - 14970 * u**2 + 17) * v**7
        - u**2 * (u**2 + 1) * (428 * u**8 - 17291 * u**6 + 41082 * u**4 - 17291 * u**2 + 428) * v**6
        + 12 * u**3 * (4 * u**8 + 3773 * u**6 - 8726 * u**4 + 3773 * u**2 + 4) * v**5
        + u**4 * (u**2 + 1) * (53 * u**2 + 14 * u - 53) * (53 * u**2 - 14 * u - 53) * v**4
        - u**3 * (17 * u**8 + 594 * u**6 - 2526 * u**4 + 594 * u**2 + 17) * v**3
        - 3 * u**4 * (u**2 + 1) * (16 * u**4 - 45 * u**2 + 16) * v**2
        - 3 * u**5 * (5 * u**4 - 2 * u**2 + 5) * v
        - u**6 * (u**2 + 1)
    )


def _r2() -> ExactPoly:
    u, v, _ = _uvg()
    return (
        -64 * u**4 * v**12
        + 264 * u**3 * (u**2 + 1) * v**11
        - 3 * u**2 * (688 * u**4 - 1493 * u**2 + 688) * v**10
        + 2 * u * (u**2 + 1) * (68 * u**4 - 1877 * u**2 + 68) * v**9
        + 3 * u**2 * (39521 * u**4 - 78382 * u**2 + 39521) * v**8
        - 6 * u * (u**2 + 1) * (6106 * u**4 - 10251 * u**2 + 6106) * v**7
        + (1836 * u**8 - 1581246 * u**6 + 3161950 * u**4 - 1581246 * u**2 + 1836) * v**6
        - 6 * u * (u**2 + 1) * (6106 * u**4 - 10251 * u**2 + 6106) * v**5
        + 3 * u**2 * (39521 * u**4 - 78382 * u**2 + 39521) * v**4
        + 2 * u * (u**2 + 1) * (68 * u**4 - 1877 * u**2 + 68) * v**3
        - 3 * u**2 * (688 * u**4 - 1493 * u**2 + 688) * v**2
        + 264 * u**3 * (u**2 + 1) * v
        - 64 * u**4
    )


def _h3() -> ExactPoly:
    u, v, g = _uvg()
    c5 = u**3 * (v**2 - 1) ** 5 * (2 * u**2 * v + u * v**2 + u + 2 * v)
    c4 = -(u**2) * v * (v**2 - 1) ** 4 * (u**2 - 1) * (u**2 * v + 14 * u * v**2 + 14 * u + v)
    c3 = -2 * u * (v**2 - 1) ** 3 * (
        u**6 * v**3 - 8 * u**5 * v**4 - 9 * u**4 * v**5 + u**3 * v**6 - 8 * u**5 * v**2
        - 47 * u**4 * v**3 + 79 * u**3 * v**4 - 9 * u**2 * v**5 - 9 * u**4 * v + 79 * u**3 * v**2
        - 47 * u**2 * v**3 - 8 * u * v**4 + u**3 - 9 * u**2 * v - 8 * u * v**2 + v**3
    )
    c2 = 2 * u * v * (v**2 - 1) ** 2 * (u**2 - 1) * (
        u**4 * v**4 - 15 * u**3 * v**5 - u**2 * v**6 + u**4 * v**2 - 98 * u**3 * v**3
        + 127 * u**2 * v**4 - 15 * u * v**5 - 15 * u**3 * v + 127 * u**2 * v**2 - 98 * u * v**3
        + v**4 - u**2 - 15 * u * v + v**2
    )
    c1 = u * (v**2 - 1) * (
        2 * u**6 * v**7 + 16 * u**5 * v**8 - 4 * u**4 * v**9 + u**3 * v**10
        + 108 * u**6 * v**5 - 112 * u**5 * v**6 - 34 * u**4 * v**7 - 3 * u**3 * v**8 - 4 * u**2 * v**9
        + 2 * u**6 * v**3 - 112 * u**5 * v**4 - 164 * u**4 * v**5 + 322 * u**3 * v**6
        - 34 * u**2 * v**7 + 16 * u * v**8 + 16 * u**5 * v**2 - 34 * u**4 * v**3
        + 322 * u**3 * v**4 - 164 * u**2 * v**5 - 112 * u * v**6 + 2 * v**7 - 4 * u**4 * v
        - 3 * u**3 * v**2 - 34 * u**2 * v**3 - 112 * u * v**4 + 108 * v**5
        + u**3 - 4 * u**2 * v + 16 * u * v**2 + 2 * v**3
    )
    c0 = -(v**2) * (u**2 - 1) * (
        2 * u**5 * v**7 + u**4 * v**8 + 32 * u**6 * v**4 - 50 * u**5 * v**5
        + 28 * u**4 * v**6 - 20 * u**3 * v**7 + u**2 * v**8 - 50 * u**5 * v**3 + 38 * u**4 * v**4
        - 12 * u**3 * v**5 + 28 * u**2 * v**6 + 2 * u * v**7 + 2 * u**5 * v + 28 * u**4 * v**2
        - 12 * u**3 * v**3 + 38 * u**2 * v**4 - 50 * u * v**5 + u**4 - 20 * u**3 * v
        + 28 * u**2 * v**2 - 50 * u * v**3 + 32 * v**4 + u**2 + 2 * u * v
    )
    return c5 * g**5 + c4 * g**4 + c3 * g**3 + c2 * g**2 + c1 * g + c0


def _h31() -> ExactPoly:
    u, v, _ = _uvg()
    return (
        9 * u**4 * v**7
        + u**3 * (8 * u**2 + 3 * u + 54) * v**6
        + u**2 * (22 * u**3 - 111 * u**2 - 306 * u + 594) * v**5
        + u * (16 * u**4 - 183 * u**3 + 854 * u**2 - 936 * u + 72) * v**4
        - u * (4 * u**4 + 21 * u**3 - 180 * u**2 + 356 * u - 24) * v**3
        - u * (8 * u**4 - 101 * u**3 + 358 * u**2 - 344 * u - 120) * v**2
        + (-2 * u**5 + 43 * u**4 - 338 * u**3 + 1186 * u**2 - 1848 * u + 1024) * v
        - u * (u - 2) * (u - 4) ** 2
    )


_BUILDERS = {"R1": _r1, "R2": _r2, "H3": _h3, "H31": _h31}


@lru_cache(maxsize=None)
def build_appendix(name: str) -> ExactPoly:
    """General polynomial by name, one of R1, R2, H3, H31."""
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise ValueError(f"unknown polynomial {name!r}; expected one of {NAMES}") from None


# -- published specializations, transcribed independently of the general forms


def _u():
    return ExactPoly.var("u")


def _v():
    return ExactPoly.var("v")


def _g():
    return ExactPoly.var(GAMMA)


def _dense(coeffs_high_to_low, var):
    x = ExactPoly.var(var)
    out = ExactPoly.const(0)
    for c in coeffs_high_to_low:
        out = out * x + c
    return out


def _r1_v1():
    u = _u()
    return (u + 1) ** 2 * (u**2 + u + 1) * _dense(
        [17, -227, -71526, -610029, -1615317, 4554960, -1615317, -610029, -71526, -227, 17], "u")


def _r1_vu():
    u = _u()
    return -81 * u**6 * (u**2 + 1) * _dense(
        [1, 0, -25, 0, -456, 0, 25326, 0, -7797, 0, -31194, 0, -7797, 0, 25326, 0, -456, 0, -25, 0, 1], "u")


def _r1_u74():
    return _dense([
        -899358946693952, -998033287229652576, -236273294846159095872,
        -6233874231058218081704, 13828786452622076515408, 20501425245268386910464,
        -11457482312591678745030912, 28434278502998776616331514,
        -212676989914124169685024388, -354523933163399054340696386,
        994839798467750981296989933, -354523933163399054340696386,
        -212676989914124169685024388, 28434278502998776616331514,
        -11457482312591678745030912, 20501425245268386910464,
        13828786452622076515408, -6233874231058218081704,
        -236273294846159095872, -998033287229652576, -899358946693952,
    ], "v")


def _r1_u76():
    return _dense([
        -1113227487383552, -1268771824564122624, -308489817962516201472,
        -8356334350772692924096, 18055403762437022103808, 27280979403158247822336,
        -15784652469256215920728512, 40621920223278737678705036,
        -292552429520779710016454288, -490771670006273317238659564,
        1560081942219797860180360833, -490771670006273317238659564,
        -292552429520779710016454288, 40621920223278737678705036,
        -15784652469256215920728512, 27280979403158247822336,
        18055403762437022103808, -8356334350772692924096,
        -308489817962516201472, -1268771824564122624, -1113227487383552,
    ], "v")


def _r1_v2():
    return _dense([
        17408, -127360, -97804288, -1143554440, -5615140720, -5209018030, 5416299723,
        11881429500, 5416299723, -5209018030, -5615140720, -1143554440, -97804288,
        -127360, 17408,
    ], "u")


def _r1_u_v2():
    v = _v()
    inner = _dense([
        51, -94, 682, 471, 2699, 33297, 38096, -13039, 197314, -252196, 309782, -354726,
        192534, -296674, 192534, -354726, 309782, -252196, 197314, -13039, 38096, 33297,
        2699, 471, 682, -94, 51,
    ], "v")
    return -9 * v**10 * inner * (v + 1) ** 2


def _r2_v1():
    return _dense([1836, -73000, -1348248, 43032, 2700488, 43032, -1348248, -73000, 1836], "u")


def _r2_vu():
    u = _u()
    return -216 * u**4 * _dense([8, 0, -393, 0, 8490, 0, -15968, 0, 8490, 0, -393, 0, 8], "u")


def _r2_u76():
    return _dense([
        -2135179264, 669494588928, -397583235316224, 1982571342746336, 22839237334338480,
        -536478278900935632, 1738931358905378380, -536478278900935632, 22839237334338480,
        1982571342746336, -397583235316224, 669494588928, -2135179264,
    ], "v")


def _h3_76_3():
    return _dense([
        509522997149696, -11464849789747200, -254059618640269312, 47622937841740800,
        3611925187779284480, -24809993679363631200,
    ], GAMMA)


def _h3_76_4():
    return _dense([
        15836668279200000, -278265426516000000, -3292245295420608000, -216103625559360000,
        33077473098545767680, -141369532357567852800,
    ], GAMMA)


def _h3_g2():
    v = _v()
    return (
        -32 * v**22
        + (-6 * v**9 + 302 * v**7 - 218 * v**5 + 18 * v**3) * v**14
        + (23 * v**10 - 1020 * v**8 + 1226 * v**6 + 4 * v**4 - 297 * v**2) * v**12
        + (-32 * v**11 + 1658 * v**9 - 2802 * v**7 - 202 * v**5 + 1778 * v**3 - 432 * v) * v**10
        + (18 * v**12 - 1352 * v**10 + 3290 * v**8 - 3290 * v**4 + 1352 * v**2 - 18) * v**8
        + (432 * v**11 - 1778 * v**9 + 202 * v**7 + 2802 * v**5 - 1658 * v**3 + 32 * v) * v**6
        + (297 * v**10 - 4 * v**8 - 1226 * v**6 + 1020 * v**4 - 23 * v**2) * v**4
        + (-18 * v**9 + 218 * v**7 - 302 * v**5 + 6 * v**3) * v**2
        + 32 * v**6
    )


def _h31_v1():
    return _dense([32, -160, 96, 800, -1600, 1024], "u")


def _h31_vu():
    u = _u()
    return u * _dense([17, 25, -41, -493, 1419, -657, -599, 29, 1316, -1880, 1056], "u")


def _h31_u76():
    return _dense([
        300259584, 20407994240, 51947461024, 34832612448, -10765745952, -17069780576,
        -3778140160, -29154816,
    ], "v")


def _sub(name, **vals):
    def make():
        return build_appendix(name).substitute(
            {k: (val() if callable(val) else val) for k, val in vals.items()})
    return make


# key -> (published display, general constructor specialized the same way)
SPECIALIZATIONS = {
    "R1(u,v=1)": (_r1_v1, _sub("R1", v=1)),
    "R1(u,v=u)": (_r1_vu, _sub("R1", v=_u)),
    "R1(u=74,v)": (_r1_u74, _sub("R1", u=74)),
    "R1(u=76,v)": (_r1_u76, _sub("R1", u=76)),
    "R1(u,v=2)": (_r1_v2, _sub("R1", v=2)),
    "R1(u=v^2,v)": (_r1_u_v2, _sub("R1", u=lambda: _v() ** 2)),
    "R2(u,v=1)": (_r2_v1, _sub("R2", v=1)),
    "R2(u,v=u)": (_r2_vu, _sub("R2", v=_u)),
    "R2(u=76,v)": (_r2_u76, _sub("R2", u=76)),
    "H3(u=76,v=3,γ)": (_h3_76_3, _sub("H3", u=76, v=3)),
    "H3(u=76,v=4,γ)": (_h3_76_4, _sub("H3", u=76, v=4)),
    "H3(v,γ=2)": (_h3_g2, _sub("H3", u=lambda: _v() ** 2, **{GAMMA: 2})),
    "H31(u,v=1)": (_h31_v1, _sub("H31", v=1)),
    "H31(u,v=u)": (_h31_vu, _sub("H31", v=_u)),
    "H31(u=76,v)": (_h31_u76, _sub("H31", u=76)),
}


@lru_cache(maxsize=None)
def published(key: str) -> ExactPoly:
    return SPECIALIZATIONS[key][0]()


@lru_cache(maxsize=None)
def specialized(key: str) -> ExactPoly:
    return SPECIALIZATIONS[key][1]()


def check_specializations() -> dict[str, bool]:
    """Exact coefficient comparison of every display with its specialization."""
    return {k: published(k) == specialized(k) for k in SPECIALIZATIONS}
