"""
Reference values for the published counting tables, transcribed once and
frozen.  Rows are n = 1..9, columns are affine length s = 0..9.

EXCLUDED_TABLE holds the counts of positive elements that contain one of the
two alternating boundary patterns; BLOBBED_TABLE holds the counts of blobbed
elements; DIMENSION_SEQUENCE holds the row sums of BLOBBED_TABLE, i.e. the
dimensions of the largest quotient algebra for n = 1..9.
"""

from __future__ import annotations

EXCLUDED_TABLE: tuple[tuple[int, ...], ...] = (
    # n = 1
    (0, 1, 4, 4, 4, 4, 4, 4, 4, 4),
    # n = 2
    (0, 4, 13, 16, 16, 16, 16, 16, 16, 16),
    # n = 3
    (0, 9, 42, 61, 64, 64, 64, 64, 64, 64),
    # n = 4
    (0, 36, 148, 228, 253, 256, 256, 256, 256, 256),
    # n = 5
    (0, 100, 500, 845, 990, 1021, 1024, 1024, 1024, 1024),
    # n = 6
    (0, 400, 1825, 3160, 3846, 4056, 4093, 4096, 4096, 4096),
    # n = 7
    (0, 1225, 6370, 11711, 14868, 16051, 16338, 16381, 16384, 16384),
    # n = 8
    (0, 4900, 23716, 44100, 57428, 63308, 65108, 65484, 65533, 65536),
    # n = 9
    (0, 15876, 84672, 164304, 221004, 249012, 259008, 261609, 262086, 262141),
)

BLOBBED_TABLE: tuple[tuple[int, ...], ...] = (
    # n = 1
    (2, 3, 0, 0, 0, 0, 0, 0, 0, 0),
    # n = 2
    (6, 10, 3, 0, 0, 0, 0, 0, 0, 0),
    # n = 3
    (20, 41, 20, 3, 0, 0, 0, 0, 0, 0),
    # n = 4
    (70, 146, 90, 26, 3, 0, 0, 0, 0, 0),
    # n = 5
    (252, 572, 412, 157, 32, 3, 0, 0, 0, 0),
    # n = 6
    (924, 2108, 1673, 778, 224, 38, 3, 0, 0, 0),
    # n = 7
    (3432, 8213, 7072, 3733, 1304, 303, 44, 3, 0, 0),
    # n = 8
    (12870, 30850, 28050, 16402, 6714, 1954, 394, 50, 3, 0),
    # n = 9
    (48620, 120260, 115112, 72608, 33044, 11156, 2792, 497, 56, 3),
)

DIMENSION_SEQUENCE: tuple[int, ...] = (
    5,
    19,
    84,
    335,
    1428,
    5748,
    24104,
    97287,
    404148,
)
