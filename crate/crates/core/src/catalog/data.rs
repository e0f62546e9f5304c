//! Embedded datasets: record wings, the two labeled base configurations,
//! cluster models, and the construction recipes. Decimal coordinates are
//! carried verbatim as strings and parsed into exact rationals; every
//! rotated point is computed, never transcribed.

/// Wing of the optimal 24-point set (3699 crossings). Prefixes of this
/// wing expand to record sets of every smaller size.
pub(super) const K24_WING: &[(&str, &str)] = &[
    ("-51", "113"),
    ("6", "834"),
    ("16", "989"),
    ("18", "644"),
    ("18", "1068"),
    ("22", "211"),
    ("-26", "313"),
    ("17", "1036"),
];

/// Crossing counts of the expanded K24 wing prefixes (3, 6, ..., 24
/// points), frozen from the brute-force counter.
pub(super) const K24_PREFIX_CROSSINGS: [u64; 8] = [0, 3, 36, 153, 447, 1029, 2055, 3699];

pub(super) const K42_WING: &[(&str, &str)] = &[
    ("620", "308"),
    ("1260", "-504"),
    ("1288", "-482"),
    ("1396", "-427"),
    ("2564", "206"),
    ("2775", "173"),
    ("3806", "25"),
    ("5250", "-229"),
    ("8891", "12"),
    ("9315", "10"),
    ("10634", "-6"),
    ("11224", "13"),
    ("12322", "21"),
    ("19157", "64"),
];

pub(super) const K48_WING: &[(&str, &str)] = &[
    ("-57807.48847", "99345.28317"),
    ("-57806.65857", "99343.86617"),
    ("-34105.90293", "58848.08466"),
    ("-37110.08631", "64005.82257"),
    ("-31864.30787", "55277.26387"),
    ("-27997.58687", "48376.53697"),
    ("-26732.18287", "46163.98867"),
    ("-14558.27587", "27959.08197"),
    ("-17179.16207", "31883.97347"),
    ("-11528.14000", "19697.46500"),
    ("-9487.09731", "14127.03628"),
    ("-3461.52707", "2301.65997"),
    ("-3460.33257", "2299.31657"),
    ("-1969.55837", "8536.56197"),
    ("-1305.99477", "8113.10777"),
    ("-1153.06188", "8052.81507"),
];

pub(super) const K51_WING: &[(&str, &str)] = &[
    ("3716.08787", "1847.16703"),
    ("3723.66827", "1846.89633"),
    ("7559.84917", "-3018.73497"),
    ("7681.27767", "-2924.32337"),
    ("8372.80747", "-2555.43267"),
    ("15380.80127", "1242.65413"),
    ("22830.08397", "149.29793"),
    ("22833.62767", "150.01693"),
    ("32961.31257", "-1302.20837"),
    ("36202.07107", "-1066.09417"),
    ("53346.71877", "75.35363"),
    ("55888.52997", "69.24083"),
    ("63804.95917", "-36.22667"),
    ("63807.51607", "-36.12177"),
    ("73923.83417", "125.04913"),
    ("73924.52987", "125.05093"),
    ("114944.97357", "395.74573"),
];

pub(super) const K54_WING: &[(&str, &str)] = &[
    ("-57807.48847", "99345.28317"),
    ("-57806.65857", "99343.86617"),
    ("-34105.90293", "58848.08466"),
    ("-37110.08631", "64005.82257"),
    ("-31864.30787", "55277.26387"),
    ("-27997.58687", "48376.53697"),
    ("-26732.18287", "46163.98867"),
    ("-17179.16207", "31883.97347"),
    ("-17177.09877", "31880.90437"),
    ("-12710.94699", "25192.60584"),
    ("-11528.14000", "19697.46500"),
    ("-9224.14377", "13900.95197"),
    ("-8764.40677", "12704.76127"),
    ("-3461.52707", "2301.65997"),
    ("-3460.33257", "2299.31657"),
    ("-1969.55837", "8536.56197"),
    ("-1305.99477", "8113.10777"),
    ("-1153.06188", "8052.81507"),
];

pub(super) const K57_WING: &[(&str, &str)] = &[
    ("-31817.67721", "55426.14425"),
    ("-69368.98616", "119214.33860"),
    ("-69367.99028", "119212.63940"),
    ("-40804.41177", "70433.67069"),
    ("-35943.52523", "62061.44313"),
    ("-32126", "55922"),
    ("-28013.28687", "48376.53697"),
    ("-26778.48287", "46163.98867"),
    ("-17179.16207", "31883.97347"),
    ("-17177.09877", "31880.90437"),
    ("-12710.94699", "25192.60584"),
    ("-11528.14", "19697.465"),
    ("-9224.14377", "13900.95197"),
    ("-8764.40677", "12704.76127"),
    ("-3461.52707", "2301.65997"),
    ("-3460.33257", "2299.31657"),
    ("-1969.55837", "8536.56197"),
    ("-1305.99477", "8113.10777"),
    ("-1153.06188", "8052.81507"),
];

/// A labeled base configuration: explicitly given points plus points
/// defined as rotations of earlier ones.
pub(super) struct BaseData {
    pub given: &'static [(usize, &'static str, &'static str)],
    /// (label, source label, rotation power 1 or 2)
    pub rotated: &'static [(usize, usize, u8)],
}

/// The 30-point base configuration (9726 crossings).
pub(super) const BASE30: BaseData = BaseData {
    given: &[
        (1, "-500218.885", "793018.474"),
        (2, "-451723.944", "711948.989"),
        (5, "-200125.330", "285855.310"),
        (6, "-158721.037", "223132.241"),
        (9, "-103183.924", "120586.624"),
        (10, "-88519.236", "109026.774"),
        (11, "-70502.886", "100103.259"),
        (12, "-66221.918", "53889.958"),
        (13, "-65940.116", "50836.878"),
        (18, "-13567.216", "45695.226"),
    ],
    rotated: &[
        (3, 1, 1),
        (4, 2, 1),
        (7, 5, 1),
        (8, 6, 1),
        (14, 9, 1),
        (16, 10, 1),
        (15, 11, 1),
        (19, 12, 1),
        (20, 13, 1),
        (17, 18, 1),
        (30, 1, 2),
        (29, 2, 2),
        (28, 5, 2),
        (27, 6, 2),
        (26, 9, 2),
        (25, 10, 2),
        (24, 11, 2),
        (23, 12, 2),
        (22, 13, 2),
        (21, 18, 2),
    ],
};

/// The 51-point base configuration used by the recipes for n > 60
/// (distinct from the K51 record set).
pub(super) const BASE51: BaseData = BaseData {
    given: &[
        (1, "114935.3031", "381.37451"),
        (2, "73931.7862", "127.25511"),
        (3, "67347.3942", "75.62961"),
        (4, "63815.8559", "-37.63049"),
        (5, "55899.7316", "58.88221"),
        (6, "53352.4837", "69.45451"),
        (7, "36214.634", "-1062.97569"),
        (8, "31509.8338", "-1373.94309"),
        (9, "22847.349", "151.00411"),
        (10, "17043.162", "1175.66911"),
        (11, "16655.0717", "1034.97731"),
        (12, "15393.4257", "1230.20761"),
        (13, "8387.4352", "-2549.11369"),
        (14, "7690.1479", "-2921.61509"),
        (15, "7573.2312", "-3011.73969"),
        (16, "3717.1198", "1845.13511"),
        (17, "3714.3655", "1845.37901"),
    ],
    rotated: &[
        (18, 17, 2),
        (19, 16, 2),
        (20, 15, 1),
        (21, 14, 1),
        (22, 13, 1),
        (23, 17, 1),
        (24, 16, 1),
        (25, 14, 2),
        (26, 15, 2),
        (27, 13, 2),
        (28, 12, 2),
        (29, 11, 2),
        (30, 10, 2),
        (31, 12, 1),
        (32, 11, 1),
        (33, 10, 1),
        (34, 9, 2),
        (35, 9, 1),
        (36, 8, 1),
        (37, 8, 2),
        (38, 7, 1),
        (39, 7, 2),
        (40, 6, 2),
        (41, 6, 1),
        (42, 5, 2),
        (43, 5, 1),
        (44, 4, 1),
        (45, 4, 2),
        (46, 3, 2),
        (47, 3, 1),
        (48, 2, 2),
        (49, 2, 1),
        (50, 1, 2),
        (51, 1, 1),
    ],
};

/// Cluster models: record drawings of 4..12 points.
pub(super) const MODELS: &[(&str, &[(i64, i64)])] = &[
    ("A4", &[(0, 16865), (41470, 13435), (2213, 0), (24229, 14674)]),
    (
        "A5",
        &[
            (56337, 50707),
            (0, 38814),
            (42575, 0),
            (51990, 40716),
            (30815, 21467),
        ],
    ),
    (
        "A6",
        &[
            (31913, 61624),
            (0, 39366),
            (13197, 35824),
            (49018, 0),
            (27438, 48183),
            (34377, 27824),
        ],
    ),
    (
        "A7",
        &[
            (10881, 31696),
            (36061, 6218),
            (5214, 39717),
            (0, 59285),
            (8359, 24119),
            (59, 26990),
            (44957, 0),
        ],
    ),
    (
        "A8",
        &[
            (55255, 59712),
            (16631, 25552),
            (23666, 43408),
            (26741, 44334),
            (15615, 0),
            (3227, 56082),
            (0, 62548),
            (12393, 15412),
        ],
    ),
    (
        "A9",
        &[
            (15928, 20352),
            (22642, 16618),
            (3049, 0),
            (18325, 13804),
            (32948, 11155),
            (15236, 11815),
            (0, 29904),
            (30218, 12585),
            (3815, 27123),
        ],
    ),
    (
        "A12",
        &[
            (13290, 30827),
            (45233, 24125),
            (10217, 11859),
            (6294, 0),
            (0, 49579),
            (13699, 33996),
            (2314, 46508),
            (16411, 17184),
            (29175, 22801),
            (52500, 24275),
            (24447, 26182),
            (8784, 6906),
        ],
    ),
];

/// One pre-halving line of a recipe.
pub(super) enum LineSpec {
    /// Simple line through p_i with the given slope (direction oriented
    /// at load time to satisfy the balance condition).
    Slope(usize, &'static str),
    /// Splitting line through p_i and p_j, directed from p_i to p_j.
    Through(usize, usize),
    /// The rotation by 120 * power degrees of line `of`.
    Rot(usize, usize, u8),
}

pub(super) enum BaseId {
    Base30,
    Base51,
}

pub(super) struct RecipeData {
    pub name: &'static str,
    pub base: BaseId,
    pub expected: u64,
    /// (index, size) for every cluster of size > 1.
    pub sizes: &'static [(usize, usize)],
    /// explicit model assignments (index, model id); sizes 2 and 3 use
    /// the defaults
    pub models: &'static [(usize, &'static str)],
    pub lines: &'static [LineSpec],
}

use LineSpec::{Rot, Slope, Through};

pub(super) const RECIPES: &[RecipeData] = &[
    RecipeData {
        name: "K33",
        base: BaseId::Base30,
        expected: 14634,
        sizes: &[(9, 2), (14, 2), (26, 2)],
        models: &[],
        lines: &[Slope(9, "-2"), Rot(14, 9, 1), Rot(26, 9, 2)],
    },
    RecipeData {
        name: "K60",
        base: BaseId::Base30,
        expected: 179541,
        sizes: &[
            (1, 2),
            (2, 2),
            (3, 2),
            (4, 2),
            (5, 2),
            (6, 2),
            (7, 2),
            (8, 2),
            (9, 2),
            (10, 2),
            (11, 2),
            (12, 2),
            (13, 2),
            (14, 2),
            (15, 2),
            (16, 2),
            (17, 2),
            (18, 2),
            (19, 2),
            (20, 2),
            (21, 2),
            (22, 2),
            (23, 2),
            (24, 2),
            (25, 2),
            (26, 2),
            (27, 2),
            (28, 2),
            (29, 2),
            (30, 2),
        ],
        models: &[],
        lines: &[
            Through(1, 2),
            Through(2, 5),
            Rot(3, 1, 1),
            Rot(4, 2, 1),
            Through(5, 9),
            Through(6, 10),
            Rot(7, 5, 1),
            Rot(8, 6, 1),
            Through(9, 10),
            Through(10, 11),
            Through(11, 12),
            Through(12, 13),
            Through(13, 10),
            Rot(14, 9, 1),
            Rot(15, 11, 1),
            Rot(16, 10, 1),
            Rot(17, 18, 1),
            Through(18, 12),
            Rot(19, 12, 1),
            Rot(20, 13, 1),
            Rot(21, 18, 2),
            Rot(22, 13, 2),
            Rot(23, 12, 2),
            Rot(24, 11, 2),
            Rot(25, 10, 2),
            Rot(26, 9, 2),
            Rot(27, 6, 2),
            Rot(28, 5, 2),
            Rot(29, 2, 2),
            Rot(30, 1, 2),
        ],
    },
    RecipeData {
        name: "K63",
        base: BaseId::Base51,
        expected: 219681,
        sizes: &[
            (3, 2),
            (4, 2),
            (7, 2),
            (13, 2),
            (22, 2),
            (27, 2),
            (38, 2),
            (39, 2),
            (44, 2),
            (45, 2),
            (46, 2),
            (47, 2),
        ],
        models: &[],
        lines: &[
            Slope(3, "0.001"),
            Slope(4, "-0.02"),
            Slope(7, "-0.1"),
            Slope(13, "-1"),
            Rot(22, 13, 1),
            Rot(27, 13, 2),
            Rot(38, 7, 1),
            Rot(39, 7, 2),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(46, 3, 2),
            Rot(47, 3, 1),
        ],
    },
    RecipeData {
        name: "K66",
        base: BaseId::Base51,
        expected: 266181,
        sizes: &[
            (3, 2),
            (4, 2),
            (6, 2),
            (8, 2),
            (14, 2),
            (21, 2),
            (25, 2),
            (36, 2),
            (37, 2),
            (40, 2),
            (41, 2),
            (44, 2),
            (45, 2),
            (46, 2),
            (47, 2),
        ],
        models: &[],
        lines: &[
            Slope(3, "0.001"),
            Slope(4, "-0.011"),
            Slope(6, "-0.0305"),
            Slope(8, "-0.17"),
            Slope(14, "-1.21"),
            Rot(21, 14, 1),
            Rot(25, 14, 2),
            Rot(36, 8, 1),
            Rot(37, 8, 2),
            Rot(40, 6, 2),
            Rot(41, 6, 1),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(46, 3, 2),
            Rot(47, 3, 1),
        ],
    },
    RecipeData {
        name: "K69",
        base: BaseId::Base51,
        expected: 319731,
        sizes: &[
            (2, 2),
            (3, 2),
            (4, 2),
            (8, 2),
            (9, 2),
            (14, 2),
            (21, 2),
            (25, 2),
            (34, 2),
            (35, 2),
            (36, 2),
            (37, 2),
            (44, 2),
            (45, 2),
            (46, 2),
            (47, 2),
            (48, 2),
            (49, 2),
        ],
        models: &[],
        lines: &[
            Slope(2, "0.005"),
            Slope(3, "-0.0006"),
            Slope(4, "-0.017"),
            Slope(8, "-0.17"),
            Slope(9, "-0.25"),
            Slope(14, "-1.21"),
            Rot(21, 14, 1),
            Rot(25, 14, 2),
            Rot(34, 9, 2),
            Rot(35, 9, 1),
            Rot(36, 8, 1),
            Rot(37, 8, 2),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(46, 3, 2),
            Rot(47, 3, 1),
            Rot(48, 2, 2),
            Rot(49, 2, 1),
        ],
    },
    RecipeData {
        name: "K72",
        base: BaseId::Base51,
        expected: 380964,
        sizes: &[
            (2, 2),
            (3, 2),
            (4, 2),
            (5, 2),
            (9, 2),
            (13, 2),
            (14, 2),
            (21, 2),
            (22, 2),
            (25, 2),
            (27, 2),
            (34, 2),
            (35, 2),
            (42, 2),
            (43, 2),
            (44, 2),
            (45, 2),
            (46, 2),
            (47, 2),
            (48, 2),
            (49, 2),
        ],
        models: &[],
        lines: &[
            Slope(2, "0.005"),
            Slope(3, "0.001"),
            Slope(4, "0.04"),
            Slope(5, "-0.027"),
            Slope(9, "-0.1763"),
            Slope(13, "0.052"),
            Slope(14, "-1.1994"),
            Rot(21, 14, 1),
            Rot(22, 13, 1),
            Rot(25, 14, 2),
            Rot(27, 13, 2),
            Rot(34, 9, 2),
            Rot(35, 9, 1),
            Rot(42, 5, 2),
            Rot(43, 5, 1),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(46, 3, 2),
            Rot(47, 3, 1),
            Rot(48, 2, 2),
            Rot(49, 2, 1),
        ],
    },
    RecipeData {
        name: "K75",
        base: BaseId::Base51,
        expected: 450540,
        sizes: &[
            (1, 2),
            (2, 2),
            (4, 2),
            (5, 2),
            (8, 2),
            (9, 2),
            (13, 2),
            (14, 2),
            (21, 2),
            (22, 2),
            (25, 2),
            (27, 2),
            (34, 2),
            (35, 2),
            (36, 2),
            (37, 2),
            (42, 2),
            (43, 2),
            (44, 2),
            (45, 2),
            (48, 2),
            (49, 2),
            (50, 2),
            (51, 2),
        ],
        models: &[],
        lines: &[
            Slope(1, "0.0063"),
            Slope(2, "0.005"),
            Slope(4, "-0.011"),
            Slope(5, "-0.027"),
            Slope(8, "-0.17"),
            Slope(9, "-0.25"),
            Slope(13, "-1.08"),
            Slope(14, "-1.2"),
            Rot(21, 14, 1),
            Rot(22, 13, 1),
            Rot(25, 14, 2),
            Rot(27, 13, 2),
            Rot(34, 9, 2),
            Rot(35, 9, 1),
            Rot(36, 8, 1),
            Rot(37, 8, 2),
            Rot(42, 5, 2),
            Rot(43, 5, 1),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(48, 2, 2),
            Rot(49, 2, 1),
            Rot(50, 1, 2),
            Rot(51, 1, 1),
        ],
    },
    RecipeData {
        name: "K78",
        base: BaseId::Base51,
        expected: 529332,
        sizes: &[
            (1, 2),
            (2, 2),
            (4, 2),
            (5, 2),
            (8, 2),
            (9, 2),
            (12, 2),
            (13, 2),
            (14, 2),
            (21, 2),
            (22, 2),
            (25, 2),
            (27, 2),
            (28, 2),
            (31, 2),
            (34, 2),
            (35, 2),
            (36, 2),
            (37, 2),
            (42, 2),
            (43, 2),
            (44, 2),
            (45, 2),
            (48, 2),
            (49, 2),
            (50, 2),
            (51, 2),
        ],
        models: &[],
        lines: &[
            Through(1, 2),
            Slope(2, "0.01"),
            Slope(4, "0.02"),
            Slope(5, "-0.027"),
            Slope(8, "-0.17"),
            Slope(9, "-0.1763"),
            Slope(12, "-0.416"),
            Slope(13, "0.052"),
            Slope(14, "-1.1994"),
            Rot(21, 14, 1),
            Rot(22, 13, 1),
            Rot(25, 14, 2),
            Rot(27, 13, 2),
            Rot(28, 12, 2),
            Rot(31, 12, 1),
            Rot(34, 9, 2),
            Rot(35, 9, 1),
            Rot(36, 8, 1),
            Rot(37, 8, 2),
            Rot(42, 5, 2),
            Rot(43, 5, 1),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(48, 2, 2),
            Rot(49, 2, 1),
            Rot(50, 1, 2),
            Rot(51, 1, 1),
        ],
    },
    RecipeData {
        name: "K81",
        base: BaseId::Base51,
        expected: 618018,
        sizes: &[
            (1, 2),
            (2, 2),
            (4, 3),
            (5, 2),
            (8, 2),
            (9, 2),
            (12, 2),
            (13, 2),
            (14, 2),
            (21, 2),
            (22, 2),
            (25, 2),
            (27, 2),
            (28, 2),
            (31, 2),
            (34, 2),
            (35, 2),
            (36, 2),
            (37, 2),
            (42, 2),
            (43, 2),
            (44, 3),
            (45, 3),
            (48, 2),
            (49, 2),
            (50, 2),
            (51, 2),
        ],
        models: &[],
        lines: &[
            Slope(1, "0.0063"),
            Slope(2, "0.005"),
            Slope(4, "0.02"),
            Slope(5, "-0.0288"),
            Slope(8, "-0.169"),
            Slope(9, "-0.25"),
            Slope(12, "-0.416"),
            Slope(13, "-1.08"),
            Slope(14, "-1.21"),
            Rot(21, 14, 1),
            Rot(22, 13, 1),
            Rot(25, 14, 2),
            Rot(27, 13, 2),
            Rot(28, 12, 2),
            Rot(31, 12, 1),
            Rot(34, 9, 2),
            Rot(35, 9, 1),
            Rot(36, 8, 1),
            Rot(37, 8, 2),
            Rot(42, 5, 2),
            Rot(43, 5, 1),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(48, 2, 2),
            Rot(49, 2, 1),
            Rot(50, 1, 2),
            Rot(51, 1, 1),
        ],
    },
    RecipeData {
        name: "K84",
        base: BaseId::Base51,
        expected: 717360,
        sizes: &[
            (1, 2),
            (2, 3),
            (4, 2),
            (5, 2),
            (7, 2),
            (8, 2),
            (9, 2),
            (13, 2),
            (14, 2),
            (16, 2),
            (19, 2),
            (21, 2),
            (22, 2),
            (24, 2),
            (25, 2),
            (27, 2),
            (34, 2),
            (35, 2),
            (36, 2),
            (37, 2),
            (38, 2),
            (39, 2),
            (42, 2),
            (43, 2),
            (44, 2),
            (45, 2),
            (48, 3),
            (49, 3),
            (50, 2),
            (51, 2),
        ],
        models: &[],
        lines: &[
            Through(1, 2),
            Slope(2, "0.005"),
            Slope(4, "0.04"),
            Slope(5, "-0.027"),
            Slope(7, "-0.09"),
            Slope(8, "-0.17"),
            Slope(9, "-0.1763"),
            Slope(13, "0.052"),
            Slope(14, "0.065"),
            Slope(16, "-1.265"),
            Rot(19, 16, 2),
            Rot(21, 14, 1),
            Rot(22, 13, 1),
            Rot(24, 16, 1),
            Rot(25, 14, 2),
            Rot(27, 13, 2),
            Rot(34, 9, 2),
            Rot(35, 9, 1),
            Rot(36, 8, 1),
            Rot(37, 8, 2),
            Rot(38, 7, 1),
            Rot(39, 7, 2),
            Rot(42, 5, 2),
            Rot(43, 5, 1),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(48, 2, 2),
            Rot(49, 2, 1),
            Rot(50, 1, 2),
            Rot(51, 1, 1),
        ],
    },
    RecipeData {
        name: "K87",
        base: BaseId::Base51,
        expected: 828225,
        sizes: &[
            (1, 2),
            (2, 2),
            (3, 2),
            (4, 2),
            (5, 2),
            (6, 2),
            (8, 2),
            (9, 2),
            (12, 2),
            (13, 2),
            (14, 2),
            (15, 2),
            (20, 2),
            (21, 2),
            (22, 2),
            (25, 2),
            (26, 2),
            (27, 2),
            (28, 2),
            (31, 2),
            (34, 2),
            (35, 2),
            (36, 2),
            (37, 2),
            (40, 2),
            (41, 2),
            (42, 2),
            (43, 2),
            (44, 2),
            (45, 2),
            (46, 2),
            (47, 2),
            (48, 2),
            (49, 2),
            (50, 2),
            (51, 2),
        ],
        models: &[],
        lines: &[
            Slope(1, "0.0063"),
            Slope(2, "0.005"),
            Slope(3, "0.001"),
            Slope(4, "-0.011"),
            Slope(5, "-0.026"),
            Slope(6, "-0.0305"),
            Slope(8, "-0.17"),
            Slope(9, "-0.25"),
            Slope(12, "-0.416"),
            Slope(13, "-1.08"),
            Slope(14, "-1.21"),
            Slope(15, "-1.262"),
            Rot(20, 15, 1),
            Rot(21, 14, 1),
            Rot(22, 13, 1),
            Rot(25, 14, 2),
            Rot(26, 15, 2),
            Rot(27, 13, 2),
            Rot(28, 12, 2),
            Rot(31, 12, 1),
            Rot(34, 9, 2),
            Rot(35, 9, 1),
            Rot(36, 8, 1),
            Rot(37, 8, 2),
            Rot(40, 6, 2),
            Rot(41, 6, 1),
            Rot(42, 5, 2),
            Rot(43, 5, 1),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(46, 3, 2),
            Rot(47, 3, 1),
            Rot(48, 2, 2),
            Rot(49, 2, 1),
            Rot(50, 1, 2),
            Rot(51, 1, 1),
        ],
    },
    RecipeData {
        name: "K90",
        base: BaseId::Base51,
        expected: 951459,
        sizes: &[
            (1, 2),
            (2, 3),
            (4, 3),
            (5, 2),
            (7, 2),
            (8, 2),
            (9, 2),
            (12, 2),
            (13, 2),
            (14, 2),
            (17, 2),
            (18, 2),
            (21, 2),
            (22, 2),
            (23, 2),
            (25, 2),
            (27, 2),
            (28, 2),
            (31, 2),
            (34, 2),
            (35, 2),
            (36, 2),
            (37, 2),
            (38, 2),
            (39, 2),
            (42, 2),
            (43, 2),
            (44, 3),
            (45, 3),
            (48, 3),
            (49, 3),
            (50, 2),
            (51, 2),
        ],
        models: &[],
        lines: &[
            Through(1, 2),
            Slope(2, "0.005"),
            Slope(4, "-0.017"),
            Slope(5, "-0.0288"),
            Slope(7, "0.055"),
            Slope(8, "-0.17"),
            Slope(9, "-0.1763"),
            Slope(12, "-0.416"),
            Slope(13, "0.052"),
            Slope(14, "-1.1994"),
            Slope(17, "-1.35"),
            Rot(18, 17, 2),
            Rot(21, 14, 1),
            Rot(22, 13, 1),
            Rot(23, 17, 1),
            Rot(25, 14, 2),
            Rot(27, 13, 2),
            Rot(28, 12, 2),
            Rot(31, 12, 1),
            Rot(34, 9, 2),
            Rot(35, 9, 1),
            Rot(36, 8, 1),
            Rot(37, 8, 2),
            Rot(38, 7, 1),
            Rot(39, 7, 2),
            Rot(42, 5, 2),
            Rot(43, 5, 1),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(48, 2, 2),
            Rot(49, 2, 1),
            Rot(50, 1, 2),
            Rot(51, 1, 1),
        ],
    },
    RecipeData {
        name: "K93",
        base: BaseId::Base51,
        expected: 1088055,
        sizes: &[
            (1, 3),
            (2, 2),
            (4, 3),
            (5, 2),
            (6, 2),
            (8, 2),
            (9, 3),
            (13, 2),
            (14, 2),
            (15, 2),
            (17, 2),
            (18, 2),
            (20, 2),
            (21, 2),
            (22, 2),
            (23, 2),
            (25, 2),
            (26, 2),
            (27, 2),
            (34, 3),
            (35, 3),
            (36, 2),
            (37, 2),
            (40, 2),
            (41, 2),
            (42, 2),
            (43, 2),
            (44, 3),
            (45, 3),
            (48, 2),
            (49, 2),
            (50, 3),
            (51, 3),
        ],
        models: &[],
        lines: &[
            Through(1, 2),
            Slope(2, "0.0033"),
            Slope(4, "-0.011"),
            Slope(5, "-0.026"),
            Slope(6, "-0.033"),
            Slope(8, "-0.17"),
            Slope(9, "-0.1763"),
            Slope(13, "-1.08"),
            Slope(14, "-1.1994"),
            Slope(15, "-1.2591"),
            Slope(17, "-1.35"),
            Rot(18, 17, 2),
            Rot(20, 15, 1),
            Rot(21, 14, 1),
            Rot(22, 13, 1),
            Rot(23, 17, 1),
            Rot(25, 14, 2),
            Rot(26, 15, 2),
            Rot(27, 13, 2),
            Rot(34, 9, 2),
            Rot(35, 9, 1),
            Rot(36, 8, 1),
            Rot(37, 8, 2),
            Rot(40, 6, 2),
            Rot(41, 6, 1),
            Rot(42, 5, 2),
            Rot(43, 5, 1),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(48, 2, 2),
            Rot(49, 2, 1),
            Rot(50, 1, 2),
            Rot(51, 1, 1),
        ],
    },
    RecipeData {
        name: "K96",
        base: BaseId::Base51,
        expected: 1238646,
        sizes: &[
            (1, 3),
            (2, 2),
            (4, 3),
            (5, 2),
            (6, 2),
            (7, 2),
            (8, 2),
            (9, 2),
            (12, 2),
            (13, 2),
            (14, 2),
            (15, 2),
            (17, 2),
            (18, 2),
            (20, 2),
            (21, 2),
            (22, 2),
            (23, 2),
            (25, 2),
            (26, 2),
            (27, 2),
            (28, 2),
            (31, 2),
            (34, 2),
            (35, 2),
            (36, 2),
            (37, 2),
            (38, 2),
            (39, 2),
            (40, 2),
            (41, 2),
            (42, 2),
            (43, 2),
            (44, 3),
            (45, 3),
            (48, 2),
            (49, 2),
            (50, 3),
            (51, 3),
        ],
        models: &[],
        lines: &[
            Slope(1, "0.0063"),
            Through(2, 4),
            // the printed slopes for lines 4, 5 and 12 leave these lines
            // unbalanced against the K96 cluster sizes; the values below
            // are balanced, and every balanced choice gives the same count
            Slope(4, "0.02"),
            Slope(5, "-0.027"),
            Slope(6, "-0.0072"),
            Slope(7, "0.0656"),
            Slope(8, "-0.17"),
            Slope(9, "-0.1763"),
            Slope(12, "-0.15"),
            Slope(13, "0.052"),
            Slope(14, "-1.1994"),
            Slope(15, "-1.2591"),
            Slope(17, "-1.35028010"),
            Rot(18, 17, 2),
            Rot(20, 15, 1),
            Rot(21, 14, 1),
            Rot(22, 13, 1),
            Rot(23, 17, 1),
            Rot(25, 14, 2),
            Rot(26, 15, 2),
            Rot(27, 13, 2),
            Rot(28, 12, 2),
            Rot(31, 12, 1),
            Rot(34, 9, 2),
            Rot(35, 9, 1),
            Rot(36, 8, 1),
            Rot(37, 8, 2),
            Rot(38, 7, 1),
            Rot(39, 7, 2),
            Rot(40, 6, 2),
            Rot(41, 6, 1),
            Rot(42, 5, 2),
            Rot(43, 5, 1),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(48, 2, 2),
            Rot(49, 2, 1),
            Rot(50, 1, 2),
            Rot(51, 1, 1),
        ],
    },
    RecipeData {
        name: "K99",
        base: BaseId::Base51,
        expected: 1404552,
        sizes: &[
            (1, 2),
            (2, 2),
            (3, 2),
            (4, 3),
            (5, 3),
            (7, 2),
            (8, 2),
            (9, 3),
            (12, 2),
            (13, 2),
            (14, 2),
            (15, 2),
            (17, 2),
            (18, 2),
            (20, 2),
            (21, 2),
            (22, 2),
            (23, 2),
            (25, 2),
            (26, 2),
            (27, 2),
            (28, 2),
            (31, 2),
            (34, 3),
            (35, 3),
            (36, 2),
            (37, 2),
            (38, 2),
            (39, 2),
            (42, 3),
            (43, 3),
            (44, 3),
            (45, 3),
            (46, 2),
            (47, 2),
            (48, 2),
            (49, 2),
            (50, 2),
            (51, 2),
        ],
        models: &[],
        lines: &[
            Slope(1, "0.0063"),
            Slope(2, "0.005"),
            Slope(3, "0.001"),
            Through(4, 7),
            Slope(5, "-0.026"),
            Slope(7, "0.055"),
            Slope(8, "-0.17"),
            Slope(9, "-0.1763"),
            Slope(12, "-0.416"),
            Slope(13, "-1.08"),
            Slope(14, "-1.1994"),
            Slope(15, "-1.2591"),
            Slope(17, "-1.35"),
            Rot(18, 17, 2),
            Rot(20, 15, 1),
            Rot(21, 14, 1),
            Rot(22, 13, 1),
            Rot(23, 17, 1),
            Rot(25, 14, 2),
            Rot(26, 15, 2),
            Rot(27, 13, 2),
            Rot(28, 12, 2),
            Rot(31, 12, 1),
            Rot(34, 9, 2),
            Rot(35, 9, 1),
            Rot(36, 8, 1),
            Rot(37, 8, 2),
            Rot(38, 7, 1),
            Rot(39, 7, 2),
            Rot(42, 5, 2),
            Rot(43, 5, 1),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(46, 3, 2),
            Rot(47, 3, 1),
            Rot(48, 2, 2),
            Rot(49, 2, 1),
            Rot(50, 1, 2),
            Rot(51, 1, 1),
        ],
    },
    RecipeData {
        name: "K315",
        base: BaseId::Base51,
        expected: 152210640,
        sizes: &[
            (1, 12),
            (2, 8),
            (4, 9),
            (5, 7),
            (6, 5),
            (7, 7),
            (8, 6),
            (9, 8),
            (10, 2),
            (11, 4),
            (12, 7),
            (13, 8),
            (14, 6),
            (15, 6),
            (16, 4),
            (17, 5),
            (18, 5),
            (19, 4),
            (20, 6),
            (21, 6),
            (22, 8),
            (23, 5),
            (24, 4),
            (25, 6),
            (26, 6),
            (27, 8),
            (28, 7),
            (29, 4),
            (30, 2),
            (31, 7),
            (32, 4),
            (33, 2),
            (34, 8),
            (35, 8),
            (36, 6),
            (37, 6),
            (38, 7),
            (39, 7),
            (40, 5),
            (41, 5),
            (42, 7),
            (43, 7),
            (44, 9),
            (45, 9),
            (48, 8),
            (49, 8),
            (50, 12),
            (51, 12),
        ],
        models: &[
            (1, "A12"),
            (2, "A8"),
            (4, "A9"),
            (5, "A7"),
            (6, "A5"),
            (7, "A7"),
            (8, "A6"),
            (9, "A8"),
            (11, "A4"),
            (12, "A7"),
            (13, "A8"),
            (14, "A6"),
            (15, "A6"),
            (16, "A4"),
            (17, "A5"),
            (18, "A5"),
            (19, "A4"),
            (20, "A6"),
            (21, "A6"),
            (22, "A8"),
            (23, "A5"),
            (24, "A4"),
            (25, "A6"),
            (26, "A6"),
            (27, "A8"),
            (28, "A7"),
            (29, "A4"),
            (31, "A7"),
            (32, "A4"),
            (34, "A8"),
            (35, "A8"),
            (36, "A6"),
            (37, "A6"),
            (38, "A7"),
            (39, "A7"),
            (40, "A5"),
            (41, "A5"),
            (42, "A7"),
            (43, "A7"),
            (44, "A9"),
            (45, "A9"),
            (48, "A8"),
            (49, "A8"),
            (50, "A12"),
            (51, "A12"),
        ],
        lines: &[
            Through(1, 2),
            Through(2, 4),
            Through(4, 7),
            Through(5, 7),
            Slope(6, "-0.0072"),
            Slope(7, "0.0656"),
            Slope(8, "-0.17"),
            Slope(9, "-0.1763"),
            Slope(10, "-0.04"),
            Slope(11, "-0.3942"),
            Slope(12, "-0.052668"),
            Slope(13, "0.052"),
            Slope(14, "-1.1994"),
            Slope(15, "-1.2591"),
            Slope(16, "-0.07"),
            Slope(17, "-1.35028010"),
            Rot(18, 17, 2),
            Rot(19, 16, 2),
            Rot(20, 15, 1),
            Rot(21, 14, 1),
            Rot(22, 13, 1),
            Rot(23, 17, 1),
            Rot(24, 16, 1),
            Rot(25, 14, 2),
            Rot(26, 15, 2),
            Rot(27, 13, 2),
            Rot(28, 12, 2),
            Rot(29, 11, 2),
            Rot(30, 10, 2),
            Rot(31, 12, 1),
            Rot(32, 11, 1),
            Rot(33, 10, 1),
            Rot(34, 9, 2),
            Rot(35, 9, 1),
            Rot(36, 8, 1),
            Rot(37, 8, 2),
            Rot(38, 7, 1),
            Rot(39, 7, 2),
            Rot(40, 6, 2),
            Rot(41, 6, 1),
            Rot(42, 5, 2),
            Rot(43, 5, 1),
            Rot(44, 4, 1),
            Rot(45, 4, 2),
            Rot(48, 2, 2),
            Rot(49, 2, 1),
            Rot(50, 1, 2),
            Rot(51, 1, 1),
        ],
    },
];
