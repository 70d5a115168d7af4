"""Published bipartite counts b(n, k, nu) for order up to 10 (trivial weight)."""

TABLE_1 = {
    (2, 1, 1): 1, (3, 2, 1): 3, (4, 3, 1): 16, (4, 4, 1): 3, (4, 2, 2): 3,
    (5, 4, 1): 125, (5, 5, 1): 60, (5, 6, 1): 10, (5, 3, 2): 30,
    (6, 5, 1): 1296, (6, 6, 1): 1140, (6, 7, 1): 480, (6, 8, 1): 105, (6, 9, 1): 10,
    (6, 10, 1): 0, (6, 4, 2): 330, (6, 5, 2): 45, (6, 3, 3): 15,
    (7, 6, 1): 16807, (7, 7, 1): 23100, (7, 8, 1): 16800, (7, 9, 1): 7770,
    (7, 10, 1): 2331, (7, 5, 2): 4305, (7, 6, 2): 1575, (7, 7, 2): 210, (7, 4, 3): 315,
    (8, 7, 1): 262144, (8, 8, 1): 513240, (8, 9, 1): 555520, (8, 10, 1): 412440,
    (8, 6, 2): 66248, (8, 7, 2): 45360, (8, 8, 2): 15435, (8, 9, 2): 2940,
    (8, 10, 2): 280, (8, 5, 3): 5880, (8, 6, 3): 630, (8, 4, 4): 105,
    (9, 8, 1): 4782969, (9, 9, 1): 12551112, (9, 10, 1): 18601380,
    (9, 7, 2): 1183644, (9, 8, 2): 1287090, (9, 9, 2): 768600, (9, 10, 2): 309960,
    (9, 6, 3): 115290, (9, 7, 3): 34020, (9, 8, 3): 3780, (9, 5, 4): 3780,
    (10, 9, 1): 100000000, (10, 10, 1): 336853440, (10, 8, 2): 24170310,
    (10, 9, 2): 37948680, (10, 10, 2): 34146000, (10, 7, 3): 2467080,
    (10, 8, 3): 1379700, (10, 9, 3): 392175, (10, 10, 3): 66150,
    (10, 6, 4): 107100, (10, 7, 4): 9450, (10, 5, 5): 945,
}


def _F(p, q=1):
    from fractions import Fraction
    return Fraction(p, q)


# Printed generating function for bipartite graphs without isolated vertices,
# keyed (x, y, z) -> coefficient. The x^7 part stops at y^10 and the x^10
# part at y^20; every other order is printed in full.
APPENDIX_GF = {
    (0, 0, 0): _F(1),
    (2, 1, 1): _F(1, 2),
    (3, 2, 1): _F(1, 2),
    (4, 2, 2): _F(1, 8), (4, 3, 1): _F(2, 3), (4, 4, 1): _F(1, 8),
    (5, 3, 2): _F(1, 4), (5, 4, 1): _F(25, 24), (5, 5, 1): _F(1, 2), (5, 6, 1): _F(1, 12),
    (6, 3, 3): _F(1, 48), (6, 4, 2): _F(11, 24), (6, 5, 2): _F(1, 16), (6, 5, 1): _F(9, 5),
    (6, 6, 1): _F(19, 12), (6, 7, 1): _F(2, 3), (6, 8, 1): _F(7, 48), (6, 9, 1): _F(1, 72),
    (7, 4, 3): _F(1, 16), (7, 5, 2): _F(41, 48), (7, 6, 2): _F(5, 16), (7, 6, 1): _F(2401, 720),
    (7, 7, 2): _F(1, 24), (7, 7, 1): _F(55, 12), (7, 8, 1): _F(10, 3), (7, 9, 1): _F(37, 24),
    (7, 10, 1): _F(37, 80),
    (8, 16, 1): _F(1, 1152), (8, 15, 1): _F(11, 720), (8, 14, 1): _F(1, 8),
    (8, 13, 1): _F(91, 144), (8, 12, 1): _F(1583, 720), (8, 11, 1): _F(1327, 240),
    (8, 10, 2): _F(1, 144), (8, 10, 1): _F(491, 48),
    (8, 9, 2): _F(7, 96), (8, 9, 1): _F(124, 9),
    (8, 8, 2): _F(49, 128), (8, 8, 1): _F(611, 48),
    (8, 7, 2): _F(9, 8), (8, 7, 1): _F(2048, 315),
    (8, 6, 3): _F(1, 64), (8, 6, 2): _F(1183, 720),
    (8, 5, 3): _F(7, 48), (8, 4, 4): _F(1, 384),
    (9, 20, 1): _F(1, 2880), (9, 19, 1): _F(1, 144), (9, 18, 1): _F(143, 2160),
    (9, 17, 1): _F(2, 5), (9, 16, 1): _F(2471, 1440), (9, 15, 1): _F(133, 24),
    (9, 14, 1): _F(140281, 10080),
    (9, 13, 2): _F(1, 9) * _F(1, 32), (9, 13, 1): _F(1, 9) * _F(9947, 40),
    (9, 12, 2): _F(1, 9) * _F(3, 8), (9, 12, 1): _F(1, 9) * _F(31357, 80),
    (9, 11, 2): _F(1, 9) * _F(343, 160), (9, 11, 1): _F(1, 9) * _F(7779, 16),
    (9, 10, 2): _F(1, 9) * _F(123, 16), (9, 10, 1): _F(1, 9) * _F(14763, 32),
    (9, 9, 2): _F(1, 9) * _F(305, 16), (9, 9, 1): _F(1, 9) * _F(24903, 80),
    (9, 8, 3): _F(140, 13440), (9, 8, 2): _F(47670, 13440), (9, 8, 1): _F(177147, 13440),
    (9, 7, 3): _F(135, 1440), (9, 7, 2): _F(4697, 1440),
    (9, 6, 3): _F(61, 192), (9, 5, 4): _F(1, 96),
    (10, 20, 1): _F(1771, 720), (10, 19, 1): _F(4129, 480), (10, 18, 1): _F(2927, 120),
    (10, 17, 2): _F(1, 10) * _F(5, 1152), (10, 17, 1): _F(1, 10) * _F(164105, 288),
    (10, 16, 2): _F(1, 10) * _F(11, 144), (10, 16, 1): _F(1, 10) * _F(2976223, 2688),
    (10, 15, 2): _F(1, 10) * _F(5, 8), (10, 15, 1): _F(1, 10) * _F(339671, 189),
    (10, 14, 2): _F(1, 10) * _F(115, 36), (10, 14, 1): _F(1, 10) * _F(38943, 16),
    (10, 13, 2): _F(1, 10) * _F(1097, 96), (10, 13, 1): _F(1, 10) * _F(98255, 36),
    (10, 12, 2): _F(1, 10) * _F(52303, 1728), (10, 12, 1): _F(1, 10) * _F(89665, 36),
    (10, 11, 3): _F(1, 10) * (_F(1, 96) + _F(1, 8) * _F(1, 18)),
    (10, 11, 2): _F(1, 10) * (_F(3661, 72) + _F(1, 8) * _F(491, 6)),
    (10, 11, 1): _F(1, 10) * _F(16070, 9),
    (10, 10, 3): _F(1, 10) * (_F(7, 64) + _F(1, 8) * _F(7, 12)),
    (10, 10, 2): _F(1, 10) * (_F(5783, 72) + _F(1, 8) * _F(992, 9)),
    (10, 10, 1): _F(1, 10) * _F(16709, 18),
    (10, 9, 3): _F(1, 10) * (_F(17, 32) + _F(1, 8) * _F(49, 16) + _F(5, 48) + _F(1, 16)),
    (10, 9, 2): _F(1, 10) * (_F(5743, 72) + _F(1, 8) * _F(611, 6) + _F(5, 48) * 50
                             + _F(1, 16) * 110),
    (10, 9, 1): _F(1, 10) * _F(156250, 567),
    (10, 8, 3): _F(15330, 40320), (10, 8, 2): _F(268559, 40320),
    (10, 7, 4): _F(15, 5760), (10, 7, 3): _F(3916, 5760),
    (10, 6, 4): _F(17, 576), (10, 5, 5): _F(1, 3840),
}
APPENDIX_FULL_ORDERS = (0, 1, 2, 3, 4, 5, 6, 8, 9)
