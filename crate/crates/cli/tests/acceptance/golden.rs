//! Reference saltus values for coprime `{a, b, a+b}` sets: one
//! `(a, b, factor)` entry per row, the saltus being the product
//! `a * factor`. Regenerating these exactly is the primary release gate.

pub const SALTUS_TABLE: [(u64, u64, u64); 320] = [
    (1, 3, 4), (1, 4, 4), (1, 5, 6), (1, 6, 6), (1, 7, 8),
    (1, 8, 8), (1, 9, 10), (1, 10, 10), (1, 11, 12), (1, 12, 12),
    (1, 13, 14), (1, 14, 14), (1, 15, 16), (1, 16, 16), (1, 17, 18),
    (1, 18, 18), (1, 19, 20), (1, 20, 20), (1, 21, 22), (1, 22, 22),
    (1, 23, 24), (1, 24, 24), (1, 25, 26), (1, 26, 26), (1, 27, 28),
    (1, 28, 28), (1, 29, 30), (1, 30, 30), (1, 31, 32), (1, 32, 32),
    (1, 33, 34), (1, 34, 34), (1, 35, 36), (1, 36, 36), (1, 37, 38),
    (1, 38, 38), (1, 39, 40), (1, 40, 40), (1, 41, 42), (1, 42, 42),
    (2, 7, 8), (2, 9, 10), (2, 11, 12), (2, 13, 14), (2, 15, 16),
    (2, 17, 18), (2, 19, 20), (2, 21, 22), (2, 23, 24), (2, 25, 26),
    (2, 27, 28), (2, 29, 30), (2, 31, 32), (2, 33, 34), (2, 35, 36),
    (2, 37, 38), (2, 39, 40), (2, 41, 42), (2, 43, 44), (2, 45, 46),
    (2, 47, 48), (2, 49, 50), (2, 51, 52), (2, 53, 54), (2, 55, 56),
    (2, 57, 58), (2, 59, 60), (2, 61, 62), (2, 63, 64), (2, 65, 66),
    (2, 67, 68), (2, 69, 70), (2, 71, 72), (2, 73, 74), (2, 75, 76),
    (2, 77, 78), (2, 79, 80), (2, 81, 82), (2, 83, 84), (2, 85, 86),
    (3, 10, 12), (3, 11, 12), (3, 13, 14), (3, 14, 16), (3, 16, 18),
    (3, 17, 18), (3, 19, 20), (3, 20, 22), (3, 22, 24), (3, 23, 24),
    (3, 25, 26), (3, 26, 28), (3, 28, 30), (3, 29, 30), (3, 31, 32),
    (3, 32, 34), (3, 34, 36), (3, 35, 36), (3, 37, 38), (3, 38, 40),
    (3, 40, 42), (3, 41, 42), (3, 43, 44), (3, 44, 46), (3, 46, 48),
    (3, 47, 48), (3, 49, 50), (3, 50, 52), (3, 52, 54), (3, 53, 54),
    (3, 55, 56), (3, 56, 58), (3, 58, 60), (3, 59, 60), (3, 61, 62),
    (3, 62, 64), (3, 64, 66), (3, 65, 66), (3, 67, 68), (3, 68, 70),
    (4, 13, 16), (4, 15, 16), (4, 17, 18), (4, 19, 22), (4, 21, 24),
    (4, 23, 24), (4, 25, 26), (4, 27, 30), (4, 29, 32), (4, 31, 32),
    (4, 33, 34), (4, 35, 38), (4, 37, 40), (4, 39, 40), (4, 41, 42),
    (4, 43, 46), (4, 45, 48), (4, 47, 48), (4, 49, 50), (4, 51, 54),
    (4, 53, 56), (4, 55, 56), (4, 57, 58), (4, 59, 62), (4, 61, 64),
    (4, 63, 64), (4, 65, 66), (4, 67, 70), (4, 69, 72), (4, 71, 72),
    (4, 73, 74), (4, 75, 78), (4, 77, 80), (4, 79, 80), (4, 81, 82),
    (4, 83, 86), (4, 85, 88), (4, 87, 88), (4, 89, 90), (4, 91, 94),
    (5, 16, 20), (5, 17, 20), (5, 18, 20), (5, 19, 20), (5, 21, 22),
    (5, 22, 24), (5, 23, 26), (5, 24, 28), (5, 26, 30), (5, 27, 30),
    (5, 28, 30), (5, 29, 30), (5, 31, 32), (5, 32, 34), (5, 33, 36),
    (5, 34, 38), (5, 36, 40), (5, 37, 40), (5, 38, 40), (5, 39, 40),
    (5, 41, 42), (5, 42, 44), (5, 43, 46), (5, 44, 48), (5, 46, 50),
    (5, 47, 50), (5, 48, 50), (5, 49, 50), (5, 51, 52), (5, 52, 54),
    (5, 53, 56), (5, 54, 58), (5, 56, 60), (5, 57, 60), (5, 58, 60),
    (5, 59, 60), (5, 61, 62), (5, 62, 64), (5, 63, 66), (5, 64, 68),
    (6, 19, 24), (6, 23, 24), (6, 25, 26), (6, 29, 34), (6, 31, 36),
    (6, 35, 36), (6, 37, 38), (6, 41, 46), (6, 43, 48), (6, 47, 48),
    (6, 49, 50), (6, 53, 58), (6, 55, 60), (6, 59, 60), (6, 61, 62),
    (6, 65, 70), (6, 67, 72), (6, 71, 72), (6, 73, 74), (6, 77, 82),
    (6, 79, 84), (6, 83, 84), (6, 85, 86), (6, 89, 94), (6, 91, 96),
    (6, 95, 96), (6, 97, 98), (6, 101, 106), (6, 103, 108), (6, 107, 108),
    (6, 109, 110), (6, 113, 118), (6, 115, 120), (6, 119, 120), (6, 121, 122),
    (6, 125, 130), (6, 127, 132), (6, 131, 132), (6, 133, 134), (6, 137, 142),
    (7, 22, 28), (7, 23, 28), (7, 24, 28), (7, 25, 28), (7, 26, 28),
    (7, 27, 28), (7, 29, 30), (7, 30, 32), (7, 31, 34), (7, 32, 36),
    (7, 33, 38), (7, 34, 40), (7, 36, 42), (7, 37, 42), (7, 38, 42),
    (7, 39, 42), (7, 40, 42), (7, 41, 42), (7, 43, 44), (7, 44, 46),
    (7, 45, 48), (7, 46, 50), (7, 47, 52), (7, 48, 54), (7, 50, 56),
    (7, 51, 56), (7, 52, 56), (7, 53, 56), (7, 54, 56), (7, 55, 56),
    (7, 57, 58), (7, 58, 60), (7, 59, 62), (7, 60, 64), (7, 61, 66),
    (7, 62, 68), (7, 64, 70), (7, 65, 70), (7, 66, 70), (7, 67, 70),
    (8, 25, 32), (8, 27, 32), (8, 29, 32), (8, 31, 32), (8, 33, 34),
    (8, 35, 38), (8, 37, 42), (8, 39, 46), (8, 41, 48), (8, 43, 48),
    (8, 45, 48), (8, 47, 48), (8, 49, 50), (8, 51, 54), (8, 53, 58),
    (8, 55, 62), (8, 57, 64), (8, 59, 64), (8, 61, 64), (8, 63, 64),
    (8, 65, 66), (8, 67, 70), (8, 69, 74), (8, 71, 78), (8, 73, 80),
    (8, 75, 80), (8, 77, 80), (8, 79, 80), (8, 81, 82), (8, 83, 86),
    (8, 85, 90), (8, 87, 94), (8, 89, 96), (8, 91, 96), (8, 93, 96),
    (8, 95, 96), (8, 97, 98), (8, 99, 102), (8, 101, 106), (8, 103, 110),
];
