"""Closed-form b_1..b_6 of the phase-fitted methods as numerator/denominator pairs.

Each ``pfdN(v, m)`` returns six ``(numerator, denominator)`` pairs. ``m`` supplies
``cos, sin, tan, cot, sec, csc`` so the same expressions run in mpmath
or in native floats.  The expressions cancel heavily for small ``v``.
"""

# fmt: off

def pfd0(v, m):
    num1 = m.csc(v/2)**10*(-806400*m.cos(5*v) - 403200*m.cos(3*v) + 403200*m.cos(6*v) + 806400*m.cos(4*v) + 75329225*v**2 + v**2*(-124184636*m.cos(v) - 24862148*m.cos(3*v) + 5153611*m.cos(4*v) + 70378348*m.cos(2*v)))
    den1 = 206438400*v**2
    num2 = m.csc(v/2)**10*(-103937264*v**2 - 8064000*m.cos(4*v) - 4032000*m.cos(6*v) + 4032000*m.cos(3*v) + 8064000*m.cos(5*v) + v**2*(-85350160*m.cos(2*v) - 5153611*m.cos(5*v) + 16708985*m.cos(3*v) + 159588050*m.cos(v)))
    den2 = 206438400*v**2
    num3 = m.csc(v/2)**10*(-36288000*m.cos(5*v) - 18144000*m.cos(3*v) + 18144000*m.cos(6*v) + 36288000*m.cos(4*v) + 257184477*v**2 + v**2*(-367257540*m.cos(v) - 16708985*m.cos(4*v) + 24862148*m.cos(5*v) + 183567900*m.cos(2*v)))
    den3 = 206438400*v**2
    num4 = m.csc(v/2)**10*(-42958788*v**2 - 12096000*m.cos(6*v) + (-24192000 + 21337540*v**2)*m.cos(4*v) + (12096000 - 45891975*v**2)*m.cos(3*v) + (24192000 - 17594587*v**2)*m.cos(5*v) + 30675810*v**2*m.cos(v))
    den4 = 51609600*v**2
    num5 = m.csc(v/2)**10*(42336000*m.cos(6*v) + 85936557*v**2 + (-84672000 + 62092318*v**2)*m.cos(5*v) + (-42336000 + 183628770*v**2)*m.cos(3*v) + (84672000 - 79794025*v**2)*m.cos(4*v) - 61351620*v**2*m.cos(2*v))
    den5 = 103219200*v**2
    num6 = m.csc(v/2)**10*(-101606400*m.cos(4*v) - 50803200*m.cos(6*v) + 50803200*m.cos(3*v) + 101606400*m.cos(5*v) + v**2*(-257184477*m.cos(3*v) - 171873114*m.cos(v) - 75329225*m.cos(5*v) + 103937264*m.cos(4*v) + 171835152*m.cos(2*v)))
    den6 = 103219200*v**2
    return ((num1, den1), (num2, den2), (num3, den3), (num4, den4), (num5, den5), (num6, den6))


def pfd1(v, m):
    num1 = m.csc(v/2)**10*(v*(-100800*m.cos(7*v/2) - 80640*m.cos(11*v/2) + 13440*m.cos(13*v/2) + 47040*m.cos(5*v/2) + 120960*m.cos(9*v/2) + v**2*(-828603*m.cos(3*v/2) - 272779*m.cos(7*v/2) + 304823*m.cos(v/2) + 554639*m.cos(5*v/2))) + m.sin(v/2)**3*(53760 + 107520*m.cos(v) + 107520*m.cos(2*v) + 107520*m.cos(3*v) + 107520*m.cos(5*v)))*m.sec(v/2)
    den1 = 6881280*v**3
    num2 = m.csc(v/2)**7*(-(134400 + 26880*m.cos(6*v) + 53760*m.cos(4*v) + 215040*m.cos(5*v) + 241920*m.cos(3*v) + 268800*m.cos(v) + 268800*m.cos(2*v))*m.sec(v/2) + v*m.csc(v/2)**3*(-544320 - 1115520*m.cos(2*v) - 678720*m.cos(4*v) - 20160*m.cos(6*v) - 3360*m.cos(7*v) + 27255*v**2 + 285600*m.cos(5*v) + 987840*m.cos(3*v) + v**2*(-211395*m.cos(3*v) + 272779*m.cos(4*v) + 393310*m.cos(2*v)) + (1088640 + 122851*v**2)*m.cos(v)))
    den2 = 1720320*v**3
    num3 = m.csc(v/2)**7*((1209600 + 430080*m.cos(6*v) + 860160*m.cos(4*v) + 1559040*m.cos(5*v) + 1989120*m.cos(3*v) + 2419200*m.cos(v) + 2419200*m.cos(2*v))*m.sec(v/2) - v*m.csc(v/2)**3*(-2358720 - 5147520*m.cos(2*v) - 3333120*m.cos(4*v) - 53760*m.cos(7*v) + 147840*m.cos(6*v) + 380696*v**2 + 1276800*m.cos(5*v) + 4751040*m.cos(3*v) + v**2*(-654530*m.cos(3*v) + 272779*m.cos(5*v) + 1636674*m.cos(4*v) + 2519110*m.cos(2*v)) + (4717440 + 1288471*v**2)*m.cos(v)))
    den3 = 3440640*v**3
    num4 = m.csc(v/2)**7*(-(1612800 + 752640*m.cos(6*v) + 1505280*m.cos(4*v) + 1720320*m.cos(5*v) + 2472960*m.cos(3*v) + 3225600*m.cos(v) + 3225600*m.cos(2*v))*m.sec(v/2) + v*m.csc(v/2)**3*(-725760 - 94080*m.cos(7*v) + 510720*m.cos(6*v) + 1578002*v**2 + (-2204160 + 3283360*v**2)*m.cos(2*v) + (-1800960 + 1477582*v**2)*m.cos(4*v) + (470400 + 616023*v**2)*m.cos(5*v) + (1451520 + 322978*v**2)*m.cos(v) + (2392320 - 20345*v**2)*m.cos(3*v)))
    den4 = 1720320*v**3
    num5 = -m.csc(v/2)**7*(-(5644800 + 3010560*m.cos(6*v) + 5268480*m.cos(5*v) + 6021120*m.cos(4*v) + 8279040*m.cos(3*v) + 11289600*m.cos(v) + 11289600*m.cos(2*v))*m.sec(v/2) + v*m.csc(v/2)**3*(2540160 - 376320*m.cos(7*v) + 923342*v**2 + 2446080*m.cos(6*v) + (-5080320 + 9613492*v**2)*m.cos(v) + (-940800 + 2740293*v**2)*m.cos(5*v) + (-752640 + 3148318*v**2)*m.cos(4*v) + (94080 + 4164295*v**2)*m.cos(3*v) + (2069760 + 4811860*v**2)*m.cos(2*v)))
    den5 = 3440640*v**3
    num6 = m.csc(v/2)**7*(-(1693440 + 940800*m.cos(6*v) + 1505280*m.cos(5*v) + 1881600*m.cos(4*v) + 2446080*m.cos(3*v) + 3386880*m.cos(v) + 3386880*m.cos(2*v))*m.sec(v/2) + v*m.csc(v/2)**3*(1270080 - 117600*m.cos(7*v) + 461671*v**2 + 799680*m.cos(6*v) + (-2540160 + 2657963*v**2)*m.cos(v) + (-799680 + 1442612*v**2)*m.cos(3*v) + (-540960 + 875393*v**2)*m.cos(5*v) + (329280 + 793335*v**2)*m.cos(4*v) + (1599360 + 1389506*v**2)*m.cos(2*v)))
    den6 = 860160*v**3
    return ((num1, den1), (num2, den2), (num3, den3), (num4, den4), (num5, den5), (num6, den6))


def pfd2(v, m):
    num1 = 61440 - 20480*v**2 + 3870*m.csc(v/2)**6 - (-17640 - 17640*m.cos(2*v) - 16320*v**2 - 376*v**4 + 8*(4410 + 3120*v**2 + 4817*v**4)*m.cos(v) - 8*v*(-1080*v**3 + 40*m.tan(v/2)**3*(11 - 5*m.cos(6*v) + 8*m.cos(5*v) + 9*m.cos(3*v) + 14*m.cos(4*v) + 22*m.cos(v) + 22*m.cos(2*v)))/(-1 + m.cos(v)))/(-1 + m.cos(v))**4 - (-30720 + 30720*v**2)*m.cos(v) - 10*m.csc(v)**2*(9144 + 9216*m.cos(v))
    den1 = 5120*v**4
    num2 = -399360 - 360/(1 + m.cos(v)) + 56320*v**2 + 264780*m.csc(v/2)**2 + m.csc(v/2)**4*(-46260 + 18720*v**2 + 28902*v**4) + (-215040 + 92160*v**2)*m.cos(v) + (-30720 + 15360*v**2)*m.cos(2*v) - m.csc(v/2)**6*(-2700 + 18480*v**2 + 36805*v**4) - 1350*v**4*m.csc(v/2)**10 - 10*v*(23552 + 8192*m.cos(v))*m.sin(v) + 30*v*(8322 + m.csc(v/2)**6*(m.ratio(1595, 8) - 609*m.cos(v)/2 + 1921*m.cos(2*v)/8))*m.cot(v/2) + 225*v**2*m.csc(v/2)**8*(12 + 59*v**2) + 10*v*(396 + 390*m.cos(v))*m.tan(v/2)/(1 + m.cos(v))
    den2 = 2560*v**4
    num3 = 4254720 - 373760*v**2 - 540*m.sec(v/2)**2 + m.csc(v/2)**2*(-2638620 + 149760*v**2 + 231216*v**4) + m.csc(v/2)**6*(-24300 + 186480*v**2 + 427485*v**4) - m.csc(v/2)**4*(-431460 + 316800*v**2 + 538752*v**4) - (-2457600 + 552960*v**2)*m.cos(v) - (-491520 + 184320*v**2)*m.cos(2*v) - (-30720 + 10240*v**2)*m.cos(3*v) - 1512900*v*m.cot(v/2) + 7740*v*m.tan(v/2) + 12150*v**4*m.csc(v/2)**10 + 30720*v*m.sin(3*v) + 532480*v*m.sin(2*v) + 1884160*v*m.sin(v) - 817950*v*m.csc(v/2)**2*m.cot(v/2) - 36450*v*m.csc(v/2)**6*m.cot(v/2) - 675*v**2*m.csc(v/2)**8*(36 + 191*v**2) + 90*v*m.sec(v/2)**2*m.tan(v/2) + 381960*v*m.csc(v/2)**4*m.cot(v/2)
    den3 = 5120*v**4
    num4 = -1578240 + 360/(1 + m.cos(v)) + 38536*v**4 + 126720*v**2 + (-1883880 + 224640*v**2 + 346824*v**4)/(-1 + m.cos(v)) + m.csc(v/2)**4*(-147420 + 144000*v**2 + 259554*v**4) + (-960000 + 145920*v**2)*m.cos(v) + (-215040 + 61440*v**2)*m.cos(2*v) + (-23040 + 7680*v**2)*m.cos(3*v) - m.csc(v/2)**6*(-8100 + 66960*v**2 + 166695*v**4) - 555520*v*m.sin(v) - 194560*v*m.sin(2*v) - 23040*v*m.sin(3*v) - 4050*v**4*m.csc(v/2)**10 - 3180*v*m.tan(v/2) + 292500*v*m.cot(v/2) - 133920*v*m.csc(v/2)**4*m.cot(v/2) - 30*v*m.sec(v/2)**2*m.tan(v/2) + 675*v**2*m.csc(v/2)**8*(12 + 67*v**2) + 12150*v*m.csc(v/2)**6*m.cot(v/2) + 347250*v*m.csc(v/2)**2*m.cot(v/2)
    den4 = 640*v**4
    num5 = 11727360 - 990720*v**2 - 514816*v**4 + 360/(1 + m.cos(v)) + m.csc(v/2)**2*(-6859980 + 1123200*v**2 + 1734120*v**4) + m.csc(v/2)**6*(-56700 + 488880*v**2 + 1272105*v**4) - m.csc(v/2)**4*(-1047060 + 1177920*v**2 + 2190912*v**4) - (-7357440 + 936960*v**2)*m.cos(v) - (-1720320 + 399360*v**2)*m.cos(2*v) - (-230400 + 76800*v**2)*m.cos(3*v) - 1054260*v*m.cot(v/2) - 2100*v*m.tan(v/2) + 28350*v**4*m.csc(v/2)**10 + 230400*v*m.sin(3*v) + 1372160*v*m.sin(2*v) + 3537920*v*m.sin(v) - 2753430*v*m.csc(v/2)**2*m.cot(v/2) - 85050*v*m.csc(v/2)**6*m.cot(v/2) - 14175*v**2*m.csc(v/2)**8*(4 + 23*v**2) - 30*v*m.sec(v/2)**2*m.tan(v/2) + 965160*v*m.csc(v/2)**4*m.cot(v/2)
    den5 = 2560*v**4
    num6 = -1793280 - 268800*m.cos(2*v) - 38400*m.cos(3*v) - 270/(1 + m.cos(v)) + 93048*v**4 + 156160*v**2 + 1042425*m.csc(v/2)**2 + (-1136640 + 138240*v**2)*m.cos(v) - (878850 + 187840*v**2 + v**4*(134667 + 68040*m.csc(v/2)**2) - (1194480 + 308320*v**2 + 950652*v**4)*m.cos(v) - 10*v*(-5328*m.sin(v) - 2384*m.sin(3*v) - 240*m.sin(7*v) + 320*m.sin(5*v) + 640*m.sin(6*v) + 1904*m.sin(4*v) + 4800*m.sin(2*v) + (3384 + 36*m.sec(v/2)**2)*m.tan(v/2) + 40*v*(-16*m.cos(5*v) - 7*m.cos(6*v) + 2*m.cos(7*v) + 140*m.cos(4*v)) + v*(-5200 + 14451*v**2)*m.cos(3*v)) + 5*(63126 - 4000*v**2 + 34095*v**4)*m.cos(2*v))/(-1 + m.cos(v))**4
    den6 = 320*v**4
    return ((num1, den1), (num2, den2), (num3, den3), (num4, den4), (num5, den5), (num6, den6))


def pfd3(v, m):
    num1 = -24576*m.sin(v) - 6144*v**3 + 5520*m.tan(v/2) + 36864*v - 2484*v*m.csc(v/2)**4 - 108*v**5*m.csc(v/2)**10 - 6*m.sec(v/2)**2*(-363*v + (24 + 61*v**2)*m.tan(v/2)) + 2*v**2*(-5635*m.tan(v/2) + 26624*m.sin(v)) + 3*(10032 - 11266*v**2 + m.csc(v/2)**4*(144 - 81*v**2) - m.csc(v/2)**2*(2208 + 904*v**2) + 99*v**2*m.csc(v/2)**6)*m.cot(v/2) + 486*v*m.csc(v/2)**6 + 32508*v/(-1 + m.cos(v)) - 6144*v*(-9 + 4*v**2)*m.cos(v) - 9*v*m.sec(v/2)**4*(-6 + v*m.tan(v/2)) + 9*v**3*m.csc(v/2)**8*(12 + 53*v**2)
    den1 = 3072*v**5
    num2 = (-190224 + 120210*v**2)*m.cot(v/2) + (6384 - 4718*v**2)*m.tan(v/2) + (36864 - 58368*v**2)*m.sin(2*v) - (-122880 + 143360*v**2)*m.sin(v) + 54*v*m.sec(v/2)**4 + 540*v**5*m.csc(v/2)**10 + 3276*v/(1 + m.cos(v)) + 6144*v*(-39 + 5*v**2) + 15984*v*m.csc(v/2)**4 + 55782*v*m.csc(v/2)**2 + m.csc(v/2)**2*(35712 + 10662*v**2)*m.cot(v/2) + m.csc(v/2)**4*(-2160 + 3537*v**2)*m.cot(v/2) - m.sec(v/2)**2*(144 + 276*v**2)*m.tan(v/2) - 1485*v**2*m.csc(v/2)**6*m.cot(v/2) - 45*v**3*m.csc(v/2)**8*(12 + 71*v**2) - 9*v**2*m.sec(v/2)**4*m.tan(v/2) + 18*v*m.csc(v/2)**6*(-135 + 48*v**2 + 212*v**4) + 6144*v*(-33 + 8*v**2)*m.cos(v) + 18432*v*(-4 + v**2)*m.cos(2*v)
    den2 = 1536*v**5
    num3 = (-491520 + 360448*v**2)*m.sin(v) + (-147456 + 167936*v**2)*m.sin(2*v) + (-24576 + 28672*v**2)*m.sin(3*v) + (-5520 + 10550*v**2)*m.tan(v/2) + (670320 - 277194*v**2)*m.cot(v/2) - 96642*v*m.csc(v/2)**2 - 4356*v/(1 + m.cos(v)) - 1620*v**5*m.csc(v/2)**10 - 54*v*m.sec(v/2)**4 + 1024*v*(606 - 67*v**2) + m.csc(v/2)**4*(6480 - 16029*v**2)*m.cot(v/2) + m.sec(v/2)**2*(144 + 366*v**2)*m.tan(v/2) - m.csc(v/2)**2*(113184 + 16440*v**2)*m.cot(v/2) - 49152*v*(-13 + 2*v**2)*m.cos(v) - 49152*v*(-5 + v**2)*m.cos(2*v) - 6*v*m.csc(v/2)**6*(-1215 + 768*v**2 + 3872*v**4) + 9*v**2*m.sec(v/2)**4*m.tan(v/2) + 36*v*m.csc(v/2)**4*(-1563 + 96*v**2 + 424*v**4) + 135*v**3*m.csc(v/2)**8*(12 + 85*v**2) + 2048*v*(21 - 4*v**2)*m.cos(3*v) + 4455*v**2*m.csc(v/2)**6*m.cot(v/2)
    den3 = 1024*v**5
    num4 = (-745200 + 240138*v**2)*m.cot(v/2) + (3072 - 2816*v**2)*m.sin(4*v) + (43008 - 44032*v**2)*m.sin(3*v) + (586752 - 337408*v**2)*m.sin(v) + (-6384 + 5258*v**2 + (288 + 552*v**2)/(1 + m.cos(v)) + 9*v**2*m.sec(v/2)**4)*m.tan(v/2) - (-178176 + 147968*v**2)*m.sin(2*v) - 3276*v/(1 + m.cos(v)) - 54*v*m.sec(v/2)**4 + 384*v*(-1350 + 133*v**2) + 1620*v**5*m.csc(v/2)**10 + m.csc(v/2)**2*(117504 + 630*v**2)*m.cot(v/2) + m.csc(v/2)**4*(-6480 + 19899*v**2)*m.cot(v/2) - 4455*v**2*m.csc(v/2)**6*m.cot(v/2) - 216*v*m.csc(v/2)**4*(-288 + 36*v**2 + 169*v**4) - 135*v**3*m.csc(v/2)**8*(12 + 95*v**2) + 18*v*m.csc(v/2)**2*(2229 + 192*v**2 + 848*v**4) + 18*v*m.csc(v/2)**6*(-405 + 336*v**2 + 1844*v**4) + 768*v*(-843 + 112*v**2)*m.cos(v) + 768*v*(-6 + v**2)*m.cos(4*v) + 1536*v*(-45 + 8*v**2)*m.cos(3*v) + 3072*v*(-81 + 13*v**2)*m.cos(2*v)
    den4 = 384*v**5
    num5 = (-4411392 + 2160640*v**2)*m.sin(v) + (-1449984 + 1034240*v**2)*m.sin(2*v) + (-356352 + 317440*v**2)*m.sin(3*v) + (-49152 + 45056*v**2)*m.sin(4*v) + (5520 - 10190*v**2)*m.tan(v/2) + (5541264 - 1600974*v**2)*m.cot(v/2) - 11340*v**5*m.csc(v/2)**10 + 54*v*m.sec(v/2)**4 + 384*v*(8568 - 796*v**2 + 159*v**4) + 4356*v/(1 + m.cos(v)) + m.csc(v/2)**2*(-840672 + 75168*v**2)*m.cot(v/2) + m.csc(v/2)**4*(45360 - 155547*v**2)*m.cot(v/2) - m.sec(v/2)**2*(144 + 366*v**2)*m.tan(v/2) - 24576*v*(-75 + 11*v**2)*m.cos(2*v) - 12288*v*(-6 + v**2)*m.cos(4*v) - 18*v*m.csc(v/2)**6*(-2835 + 2688*v**2 + 15472*v**4) - 9*v**2*m.sec(v/2)**4*m.tan(v/2) + 36*v*(1479 + v**2*(3072 + 13568*v**2))/(-1 + m.cos(v)) + 108*v*m.csc(v/2)**4*(-4263 + 720*v**2 + 3500*v**4) + 945*v**3*m.csc(v/2)**8*(12 + 101*v**2) + 3072*v*(171 - 28*v**2)*m.cos(3*v) + 3072*v*(1395 - 172*v**2)*m.cos(v) + 31185*v**2*m.csc(v/2)**6*m.cot(v/2)
    den5 = 1536*v**5
    num6 = (-1130256 + 317634*v**2)*m.cot(v/2) + (12288 - 11264*v**2)*m.sin(4*v) - (-897024 + 411648*v**2)*m.sin(v) - (-307200 + 211968*v**2)*m.sin(2*v) - (-73728 + 61440*v**2)*m.sin(3*v) - (-6384 + 5438*v**2 + (288 + 552*v**2)/(1 + m.cos(v)) + 9*v**2*m.sec(v/2)**4)*m.tan(v/2) - 128*v*(5016 - 460*v**2 + 141*v**4) + 54*v*m.sec(v/2)**4 + 2268*v**5*m.csc(v/2)**10 + 3276*v/(1 + m.cos(v)) + m.csc(v/2)**2*(169344 - 20778*v**2)*m.cot(v/2) + m.csc(v/2)**4*(-9072 + 32193*v**2)*m.cot(v/2) - 6237*v**2*m.csc(v/2)**6*m.cot(v/2) - 189*v**3*m.csc(v/2)**8*(12 + 103*v**2) - 144*v*m.csc(v/2)**4*(-651 + 120*v**2 + 590*v**4) + 6*v*m.csc(v/2)**6*(-1701 + 1680*v**2 + 9820*v**4) + 18*v*m.csc(v/2)**2*(-677 + 768*v**2 + 3392*v**4) + 2048*v*(-51 + 8*v**2)*m.cos(3*v) + 3072*v*(-269 + 32*v**2)*m.cos(v) + 3072*v*(-6 + v**2)*m.cos(4*v) + 6144*v*(-62 + 9*v**2)*m.cos(2*v)
    den6 = 256*v**5
    return ((num1, den1), (num2, den2), (num3, den3), (num4, den4), (num5, den5), (num6, den6))


def pfd4(v, m):
    num1 = m.csc(v/2)**2*(66240 - 81252*v**2) - m.csc(v/2)**4*(4320 + 8478*v**2) - (245760 - 872448*v**2 + 245760*v**4)*m.cos(v) - 810*v**2*m.csc(v/2)**6 - 18*m.sec(v/2)**4*(-80 - 373*v**2 + v*(48 + 63*v**2)*m.tan(v/2)) - 2*m.sec(v/2)**2*(28320 - 39246*v**2 + v*(6384 + 6733*v**2)*m.tan(v/2)) + 56*v*((-12288 + 11264*v**2)*m.sin(v) + (6480 - 4185*v**2)*m.tan(v/2)) + 216*v**6*m.csc(v/2)**10 - 45*v**2*m.sec(v/2)**6*(-6 + v*m.tan(v/2)) - 3*v*(-120960 + 78120*v**2 + m.csc(v/2)**2*(5856 + 4682*v**2 + 9*m.csc(v/2)**2*(96 + 54*v**2 + 5*v**2*m.csc(v/2)**2)))*m.cot(v/2)
    den1 = 24576*v**6
    num2 = (1843200 - 2288376*v**2 + 294912*v**4 - 72*m.csc(v)**2*(20080 + 20560*m.cos(v)) + 72*(20480 - 35840*v**2 + 4096*v**4)*m.cos(v))/(1 + m.cos(v)) + m.csc(v/2)**4*(21600 + 33318*v**2) + (245760 - 872448*v**2 + 245760*v**4)*m.cos(v) + (491520 - 1449984*v**2 + 245760*v**4)*m.cos(2*v) - v*(m.sec(v/2)**4*(-17118*v + 18*(144 + 161*v**2)*m.tan(v/2)) + 8*(-159744 + 109568*v**2)*m.sin(2*v) + 8*(-137520 + 48255*v**2)*m.tan(v/2) + 8*(-86016 + 78848*v**2)*m.sin(v) + m.sec(v/2)**2*(29088 + 25326*v**2)*m.tan(v/2) + 135*v*m.sec(v/2)**6*(-6 + v*m.tan(v/2))) - 1080*v**6*m.csc(v/2)**10 + 2160*v**6*m.csc(v/2)**8 + 4050*v**2*m.csc(v/2)**6 + 293508*v**2*m.csc(v/2)**2 + 3*v*(-616320 + 280920*v**2 + m.csc(v/2)**2*(20064 + 16978*v**2 + 9*m.csc(v/2)**2*(480 + 214*v**2 + 25*v**2*m.csc(v/2)**2)))*m.cot(v/2)
    den2 = 12288*v**6
    num3 = -6635520 - 1204224*v**4 + 10137600*v**2 + (-1656960 + 730968*v**2)/(1 + m.cos(v)) + m.csc(v/2)**2*(3533760 - 2033748*v**2) + m.sec(v/2)**4*(18720 + 63090*v**2) - m.csc(v/2)**4*(194400 + 236358*v**2) - (1474560 - 3612672*v**2 + 491520*v**4)*m.cos(3*v) - (1966080 - 5799936*v**2 + 983040*v**4)*m.cos(2*v) - (11550720 - 21098496*v**2 + 2703360*v**4)*m.cos(v) - 34560*v**6*m.csc(v/2)**8 + 3510*v**2*m.sec(v/2)**6 + 9720*v**6*m.csc(v/2)**10 - v*(-4671360 + 1048920*v**2 + m.sec(v/2)**4*(57360 + 42991*v**2 + (46128 + 32281*v**2)*m.cos(v)) + 585*v**2*m.sec(v/2)**6)*m.tan(v/2) - 6075*v**3*m.csc(v/2)**6*m.cot(v/2) + 270*v**2*m.csc(v/2)**6*(-135 + 128*v**4) + 360*v*(45744 - 16567*v**2)*m.cot(v/2) + 8192*v*(-2868 + 1279*v**2)*m.sin(v) + 32768*v*(-156 + 107*v**2)*m.sin(2*v) + 147456*v*(-24 + 13*v**2)*m.sin(3*v) - 234*v*m.csc(v/2)**2*(1488 + 1511*v**2)*m.cot(v/2) - 54*v*m.csc(v/2)**4*(2160 + 767*v**2)*m.cot(v/2)
    den3 = 24576*v**6
    num4 = 3686400 - 4147200*v**2 + 384000*v**4 + (-136320 + 8376*v**2)/(1 + m.cos(v)) + m.csc(v/2)**2*(-1235520 + 565596*v**2) + m.csc(v/2)**4*(64800 + 17280*v**6 + 63666*v**2) + m.sec(v/2)**4*(1440 + 3690*v**2) + (122880 - 251904*v**2 + 30720*v**4)*m.cos(4*v) + (368640 - 903168*v**2 + 122880*v**4)*m.cos(3*v) + (1474560 - 2875392*v**2 + 368640*v**4)*m.cos(2*v) + (2949120 - 5031936*v**2 + 614400*v**4)*m.cos(v) - 3240*v**6*m.csc(v/2)**10 + 270*v**2*m.sec(v/2)**6 + 15120*v**6*m.csc(v/2)**8 - v*(-339840 + 41880*v**2 + m.sec(v/2)**4*(2640 + v**2*(1087 + 90/(1 + m.cos(v))) + (1776 + 457*v**2)*m.cos(v)))*m.tan(v/2) - 86016*v*(-36 + 17*v**2)*m.sin(2*v) - 36864*v*(-154 + 67*v**2)*m.sin(v) - 36864*v*(-24 + 13*v**2)*m.sin(3*v) - 2048*v*(-132 + 61*v**2)*m.sin(4*v) - 810*v**2*m.csc(v/2)**6*(-15 + 32*v**4) + 360*v*(-14928 + 4705*v**2)*m.cot(v/2) + 2025*v**3*m.csc(v/2)**6*m.cot(v/2) + 18*v*m.csc(v/2)**2*(3888 + 5461*v**2)*m.cot(v/2) + 54*v*m.csc(v/2)**4*(720 + 209*v**2)*m.cot(v/2)
    den4 = 3072*v**6
    num5 = -26726400 - 2457600*v**4 + 28154880*v**2 + (885120 - 443976*v**2)/(1 + m.cos(v)) + m.csc(v/2)**2*(8890560 - 3578148*v**2 + 138240*v**6) - m.csc(v/2)**4*(453600 + 276480*v**6 + 382158*v**2) - m.sec(v/2)**4*(10080 + 34902*v**2) - (122880 - 215040*v**2 + 24576*v**4)*m.cos(5*v) - (983040 - 2015232*v**2 + 245760*v**4)*m.cos(4*v) - (3317760 - 6838272*v**2 + 860160*v**4)*m.cos(3*v) - (10936320 - 20097024*v**2 + 2457600*v**4)*m.cos(2*v) - (22732800 - 33146880*v**2 + 3686400*v**4)*m.cos(v) - 120960*v**6*m.csc(v/2)**8 - 1890*v**2*m.sec(v/2)**6 + 22680*v**6*m.csc(v/2)**10 + v*(-2517120 + 641640*v**2 + m.sec(v/2)**4*(32304 + v**2*(25429 + 630/(1 + m.cos(v))) + (26256 + 19507*v**2)*m.cos(v)))*m.tan(v/2) - 14175*v**3*m.csc(v/2)**6*m.cot(v/2) + 360*v*(102576 - 30047*v**2)*m.cot(v/2) + 4050*v**2*m.csc(v/2)**6*(-21 + 64*v**4) + 4096*v*(-5412 + 2429*v**2)*m.sin(2*v) + 12288*v*(-588 + 281*v**2)*m.sin(3*v) + 16384*v*(-132 + 61*v**2)*m.sin(4*v) + 20480*v*(-1956 + 755*v**2)*m.sin(v) + 20480*v*(-12 + 5*v**2)*m.sin(5*v) - 378*v*m.csc(v/2)**2*(784 + 1643*v**2)*m.cot(v/2) - 378*v*m.csc(v/2)**4*(720 + 181*v**2)*m.cot(v/2)
    den5 = 12288*v**6
    num6 = 13824000 - 14054400*v**2 + 55296*v**6 + 1228800*v**4 + (908160 - 325608*v**2)/(1 + m.cos(v)) + (10765440 - 4159512*v**2 + 276480*v**6)/(-1 + m.cos(v)) + m.csc(v/2)**4*(272160 + 207360*v**6 + 216594*v**2) + (122880 - 215040*v**2 + 24576*v**4)*m.cos(5*v) + (491520 - 1007616*v**2 + 122880*v**4)*m.cos(4*v) + (2580480 - 5031936*v**2 + 614400*v**4)*m.cos(3*v) + (5529600 - 10045440*v**2 + 1228800*v**4)*m.cos(2*v) + (16588800 - 23132160*v**2 + 2457600*v**4)*m.cos(v) - m.sec(v/2)**4*(10080 + 31878*v**2) - 13608*v**6*m.csc(v/2)**10 - 1890*v**2*m.sec(v/2)**6 + 75600*v**6*m.csc(v/2)**8 + v*(-2459520 + 553560*v**2 + (86592 + 57964*v**2)/(1 + m.cos(v)) + m.sec(v/2)**6*(3024 + 3024*v**2 + 63*(48 + 43*v**2)*m.cos(v)))*m.tan(v/2) - 552960*v*(-52 + 19*v**2)*m.sin(v) - 552960*v*(-20 + 9*v**2)*m.sin(2*v) - 20480*v*(-12 + 5*v**2)*m.sin(5*v) - 12288*v*(-444 + 203*v**2)*m.sin(3*v) - 8192*v*(-132 + 61*v**2)*m.sin(4*v) + 270*v**2*m.csc(v/2)**6*(189 - 640*v**4) + 360*v*(-61104 + 17495*v**2)*m.cot(v/2) + 8505*v**3*m.csc(v/2)**6*m.cot(v/2) + 126*v*m.csc(v/2)**2*(1104 + 2863*v**2)*m.cot(v/2) + 378*v*m.csc(v/2)**4*(432 + 103*v**2)*m.cot(v/2)
    den6 = 6144*v**6
    return ((num1, den1), (num2, den2), (num3, den3), (num4, den4), (num5, den5), (num6, den6))


def pfd5(v, m):
    num1 = -m.cos(v/2)**5*m.csc(v)**13*m.sin(v/2)**7*(-360*m.sin(3*v) - 360*m.sin(6*v) - 300*v**5 + 180*v**3 + 180*m.sin(v) + 180*m.sin(4*v) + 180*m.sin(5*v) + 180*m.sin(8*v) + v*(-3000*m.cos(4*v) - 1200*m.cos(8*v) - 600*m.cos(7*v) + 300*m.cos(5*v) + 600*m.cos(2*v) + 1800*m.cos(3*v) + 3600*m.cos(6*v) + v*(-7860*m.sin(4*v) - 2940*m.sin(v) - 1860*m.sin(8*v) - 1680*m.sin(7*v) + 360*m.sin(3*v) + 2640*m.sin(2*v) + 4020*m.sin(5*v) + 6840*m.sin(6*v) + v*(-7545*m.cos(5*v) - 7200*m.cos(6*v) + 1740*m.cos(8*v) + 2130*m.cos(7*v) + 5490*m.cos(3*v) + 10290*m.cos(4*v) + 2*v*(-3373*m.sin(5*v) - 2530*m.sin(2*v) - 2324*m.sin(6*v) + 315*m.tan(v/2) + 357*m.sin(v) + 405*m.cot(v/2) + 522*m.sin(8*v) + 770*m.sin(7*v) + 3752*m.sin(4*v) + 4516*m.sin(3*v) - 60*v*(-25*m.cos(5*v) - 14*m.cos(6*v) + 3*m.cos(8*v) + 5*m.cos(7*v) + 24*m.cos(4*v) + 45*m.cos(3*v))) + 2*(-2325 + 1080*v**2)*m.cos(2*v))) + (-1500 + 3000*v**4 + 4245*v**2)*m.cos(v))/2)
    den1 = 30*v**7
    num2 = m.csc(v/2)**7*m.sec(v/2)**9*(-5292*v**4 - 720*m.cos(4*v) - 360*m.cos(7*v) - 360*m.cos(10*v) + 360*m.cos(2*v) + 720*m.cos(5*v) + 720*m.cos(8*v) + 2736*v**2 + v*(v*(-5832*m.cos(8*v) - 3804*m.cos(7*v) - 1896*m.cos(5*v) + 1584*m.cos(9*v) + 1644*m.cos(10*v) + 4176*m.cos(6*v) + 5784*m.cos(4*v) + 6192*m.cos(3*v) + v*(-11367*m.sin(2*v) - 6426*m.sin(7*v) - 5376*m.sin(8*v) - 36*m.sin(v) + 1383*m.sin(10*v) + 1842*m.sin(9*v) + 2124*m.sin(5*v) + 4896*m.sin(6*v) + 6174*m.sin(4*v) + 11700*m.sin(3*v) - 2*v*(-2476*m.cos(7*v) - 1400*m.cos(8*v) + 351*m.cos(10*v) + 582*m.cos(9*v) + 1242*m.cos(6*v) + 1918*m.cos(4*v) + 2288*m.cos(5*v) + 4476*m.cos(3*v) - 393216*v*m.cos(v/2)**9*m.sin(v/2)**7*(17 + 15*m.cos(2*v)))) + (-8508 + 10234*v**2)*m.cos(2*v)) - 15360*m.cos(v/2)**3*m.sin(v/2)**5*(98 + 19*m.cos(6*v) + 48*m.cos(5*v) + 78*m.cos(4*v) + 132*m.cos(3*v) + 156*m.cos(2*v) + 186*m.cos(v))) + (-360 - 2076*v**2 + 15500*v**4)*m.cos(v))
    den2 = 393216*v**7
    num3 = -m.cos(v/2)**6*m.csc(v)**14*m.sin(v/2)**8*(v*(1200 - 9012*v**2 + 3000*v**4) + (-2160 + 4632*v**2 + 27224*v**4)*m.sin(3*v) + (-360 - 5844*v**2 + 7962*v**4)*m.sin(v) + (360 - 18228*v**2 + 13024*v**4)*m.sin(4*v) + (360 - 12194*v**4 + 16116*v**2)*m.sin(5*v) + (720 - 2904*v**2 + 1016*v**4)*m.sin(10*v) - (-720 + 504*v**2 + 2372*v**4)*m.sin(7*v) - (-720 + 4392*v**2 + 5180*v**4)*m.sin(2*v) - (2160 - 15432*v**2 + 7480*v**4)*m.sin(6*v) + 5670*v**4*m.tan(v/2) + 7290*v**4*m.cot(v/2) + v*(-6660 + 6420*v**4 + 41211*v**2)*m.cos(v) + v*(-2160 - 2412*v**2 + 732*v**4)*m.cos(7*v) + v*(720 - 2052*v**2 + 120*v**4)*m.cos(8*v) + v*(3420 - 20925*v**2 + 3540*v**4)*m.cos(5*v) + v*(6600 - 10212*v**4 + 17826*v**2)*m.cos(3*v) + v*(9600 - 13452*v**2 + 2184*v**4)*m.cos(6*v) + v**2*(-2976 + 1792*v**2)*m.sin(9*v) - v*(1200 - 3180*v**2 + 480*v**4)*m.cos(9*v) - v*(2160 - 2232*v**2 + 240*v**4)*m.cos(10*v) - v*(3240 - 3546*v**2 + 1560*v**4)*m.cos(2*v) - v*(6120 - 23598*v**2 + 3504*v**4)*m.cos(4*v) - (-12 + 4*v**2)*(30 + 199*v**2)*m.sin(8*v))
    den3 = 6*v**7
    num4 = (-21006720 - 3937883*v**4 + 28223520*v**2)*m.tan(v/2) + (1474560 - 2408448*v**2 + 163840*v**4)*m.sin(3*v) + (2954880 - 10545120*v**2 + 3086757*v**4)*m.cot(v/2) + (15482880 - 19980288*v**2 + 1253376*v**4)*m.sin(v) - (737280 - 2629632*v**2 + 811008*v**4)*m.sin(4*v) - (8847360 - 23887872*v**2 + 6586368*v**4)*m.sin(2*v) + 5670*v**3*m.sec(v/2)**8 + 7290*v**3*m.csc(v/2)**6 + 46080*v*(980 - 443*v**2 + 30*v**4) + 78732*v**3*m.csc(v/2)**4 + m.csc(v/2)**2*(-155520 + 23328*v**2 + 146673*v**4)*m.cot(v/2) + m.sec(v/2)**2*(2280960 - 246604*v**4 + 358656*v**2)*m.tan(v/2) - m.sec(v/2)**4*(51840 + 40806*v**4 + 176688*v**2)*m.tan(v/2) - 945*v**4*m.sec(v/2)**8*m.tan(v/2) + 24*v*(-893360 + 115673*v**2)/(1 + m.cos(v)) + 270*v*m.sec(v/2)**6*(160 + 257*v**2) + 756*v*m.csc(v/2)**2*(-2640 + 1127*v**2) + 1215*v**4*m.csc(v/2)**6*m.cot(v/2) + 4320*v*m.sec(v/2)**4*(-46 + 51*v**2) + 6144*v*(340 - 307*v**2 + 30*v**4)*m.cos(4*v) + 36864*v*(580 - 431*v**2 + 40*v**4)*m.cos(2*v) + 73728*v*(-370 + 101*v**2)*m.cos(v) + 73728*v*(-40 + 13*v**2)*m.cos(3*v) - 1080*v**2*m.sec(v/2)**6*(18 + 11*v**2)*m.tan(v/2) + 81*v**2*m.csc(v/2)**4*(240 + 167*v**2)*m.cot(v/2)
    den4 = 6144*v**7
    num5 = (-157806720 - 24636373*v**4 + 185682720*v**2)*m.tan(v/2) + (1474560 - 4669440*v**2 + 1327104*v**4)*m.sin(5*v) + (25067520 - 70729728*v**2 + 19841024*v**4)*m.sin(3*v) + (169574400 - 324648960*v**2 + 70533120*v**4)*m.sin(v) - (2949120 - 4030464*v**2 + 245760*v**4)*m.sin(4*v) - (21409920 - 72018720*v**2 + 19741653*v**4)*m.cot(v/2) - (45711360 - 60112896*v**2 + 3710976*v**4)*m.sin(2*v) - 503496*v**3*m.csc(v/2)**4 - 92160*v*(-2140 + 373*v**2) - 51030*v**3*m.csc(v/2)**6 + 39690*v**3*m.sec(v/2)**8 - m.csc(v/2)**2*(-1088640 + 48384*v**2 + 928557*v**4)*m.cot(v/2) - m.sec(v/2)**2*(-16208640 - 3438624*v**2 + 1476776*v**4)*m.tan(v/2) - m.sec(v/2)**4*(362880 + 212058*v**4 + 1121904*v**2)*m.tan(v/2) - 884736*v*(70 - 54*v**2 + 5*v**4)*m.cos(3*v) - 245760*v*(1400 - 767*v**2 + 60*v**4)*m.cos(v) - 49152*v*(80 - 65*v**2 + 6*v**4)*m.cos(5*v) - 24576*v*(-220 + 61*v**2)*m.cos(4*v) - 12288*v*(-6620 + 1829*v**2)*m.cos(2*v) - 8505*v**4*m.csc(v/2)**6*m.cot(v/2) - 6615*v**4*m.sec(v/2)**8*m.tan(v/2) - 756*v*m.csc(v/2)**2*(-18320 + 7131*v**2) + 84*v*m.sec(v/2)**2*(-859120 + 99661*v**2) + 756*v*m.sec(v/2)**4*(-2160 + 1471*v**2) + 1890*v*m.sec(v/2)**6*(160 + 239*v**2) - 1890*v**2*m.sec(v/2)**6*(72 + 41*v**2)*m.tan(v/2) - 1701*v**2*m.csc(v/2)**4*(80 + 51*v**2)*m.cot(v/2)
    den5 = 24576*v**7
    num6 = (-484318080 - 71232167*v**4 + 545068320*v**2)*m.tan(v/2) + (1474560 - 1720320*v**2 + 98304*v**4)*m.sin(5*v) + (44974080 - 60334080*v**2 + 3694592*v**4)*m.sin(3*v) + (64955520 - 214207200*v**2 + 57505113*v**4)*m.cot(v/2) + (376012800 - 395919360*v**2 + 21258240*v**4)*m.sin(v) - (737280 - 2088960*v**2 + 561152*v**4)*m.sin(6*v) - (23592960 - 70287360*v**2 + 19881984*v**4)*m.sin(4*v) - (221184000 - 508723200*v**2 + 127303680*v**4)*m.sin(2*v) + 61440*v*(15540 - 6273*v**2 + 400*v**4) + 119070*v**3*m.sec(v/2)**8 + 153090*v**3*m.csc(v/2)**6 + 1462860*v**3*m.csc(v/2)**4 + m.csc(v/2)**2*(-3265920 + 30240*v**2 + 2695077*v**4)*m.cot(v/2) + m.sec(v/2)**2*(48867840 - 4244044*v**4 + 11155200*v**2)*m.tan(v/2) - m.sec(v/2)**4*(1088640 + 567126*v**4 + 3250800*v**2)*m.tan(v/2) - 19845*v**4*m.sec(v/2)**8*m.tan(v/2) + 3780*v*m.csc(v/2)**2*(-10960 + 4139*v**2) + 4200*v*(-101648 + 11495*v**2)/(1 + m.cos(v)) + 5670*v*m.sec(v/2)**6*(160 + 233*v**2) + 25515*v**4*m.csc(v/2)**6*m.cot(v/2) + 30240*v*m.sec(v/2)**4*(-170 + 97*v**2) + 30720*v*(60 - 45*v**2 + 4*v**4)*m.cos(6*v) + 61440*v*(980 - 779*v**2 + 72*v**4)*m.cos(4*v) + 184320*v*(-3260 + 737*v**2)*m.cos(v) + 184320*v*(2660 - 1739*v**2 + 150*v**4)*m.cos(2*v) + 368640*v*(-220 + 61*v**2)*m.cos(3*v) + 614400*v*(-4 + v**2)*m.cos(5*v) - 45360*v**2*m.sec(v/2)**6*(9 + 5*v**2)*m.tan(v/2) + 2835*v**2*m.csc(v/2)**4*(144 + 89*v**2)*m.cot(v/2)
    den6 = 61440*v**7
    return ((num1, den1), (num2, den2), (num3, den3), (num4, den4), (num5, den5), (num6, den6))


CLOSED_FORMS = (pfd0, pfd1, pfd2, pfd3, pfd4, pfd5)
