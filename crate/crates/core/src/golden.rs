//! Published reference values, kept verbatim (including a misprint or two)
//! so reproductions can be diffed against them.
//!
//! Decompositions are written as `(generator, order)` lists in the printed
//! orientation.

pub type Factors = &'static [(u64, u64)];

/// Primes below 300 without a strong decomposition.
pub const NONEXISTENT_BELOW_300: &[u64] = &[71, 127, 139, 223, 277];

/// `(xi, D)`: the most decompositions of any `U_n`, `n <= 1000`, with that `xi`.
pub const D_TABLE: &[(u64, u64)] = &[
    (1, 10),
    (2, 18),
    (4, 96),
    (6, 182),
    (8, 288),
    (10, 262),
    (12, 496),
    (16, 384),
    (18, 276),
    (20, 204),
    (24, 540),
    (36, 2088),
];

pub const U273_STRONG: usize = 108;
pub const U819_LIFTS: usize = 648;

/// Multiplicity examples: two factorisations of `phi` or orders permuted.
pub const MULTIPLICITY_211: &[Factors] = &[
    &[(15, 6), (107, 5), (199, 7)],
    &[(58, 7), (134, 15), (210, 2)],
    &[(196, 3), (203, 35), (210, 2)],
];
pub const MULTIPLICITY_31: &[Factors] = &[&[(30, 2), (2, 5), (5, 3)], &[(25, 3), (30, 2), (4, 5)]];
pub const MULTIPLICITY_547: &[Factors] = &[
    &[(40, 3), (172, 26), (304, 7)],
    &[(40, 3), (544, 7), (501, 26)],
    &[(520, 7), (40, 3), (107, 26)],
];
pub const MULTIPLICITY_191: &[Factors] = &[&[(39, 5), (190, 2), (150, 19)], &[(184, 5), (190, 2), (5, 19)]];

pub struct CoverageRow {
    pub n: u64,
    pub factors: Factors,
    /// `Some(1)` for `x1`, `Some(2)` for `x2` where the source says which root.
    pub root: Option<u8>,
}

const fn row(n: u64, factors: Factors) -> CoverageRow {
    CoverageRow { n, factors, root: None }
}

const fn rooted(n: u64, factors: Factors, root: u8) -> CoverageRow {
    CoverageRow { n, factors, root: Some(root) }
}

/// `<-x1-2>_3 x <-1>_2 x <x1>_m`, `n < 1000`.
pub const ODD_ROOT_COVERAGE: &[CoverageRow] = &[
    row(31, &[(25, 3), (30, 2), (4, 5)]),
    row(43, &[(6, 3), (42, 2), (35, 7)]),
    row(79, &[(55, 3), (78, 2), (22, 13)]),
    row(211, &[(196, 3), (210, 2), (13, 35)]),
    row(463, &[(21, 3), (462, 2), (440, 77)]),
    row(571, &[(109, 3), (570, 2), (460, 95)]),
    row(751, &[(678, 3), (750, 2), (71, 125)]),
    row(907, &[(522, 3), (906, 2), (383, 151)]),
];

/// `<2x2+3>_m x <x2+1>_3 x <-1>_2`, `n < 1000`. The 967 row prints order
/// 162 where `(n-1)/6 = 161`.
pub const DOUBLED_ROOT_COVERAGE: &[CoverageRow] = &[
    row(67, &[(59, 11), (29, 3), (66, 2)]),
    row(103, &[(10, 17), (46, 3), (102, 2)]),
    row(151, &[(86, 25), (118, 3), (150, 2)]),
    row(367, &[(200, 61), (283, 3), (366, 2)]),
    row(439, &[(343, 73), (171, 3), (438, 2)]),
    row(499, &[(279, 83), (139, 3), (498, 2)]),
    row(619, &[(505, 103), (252, 3), (618, 2)]),
    row(643, &[(355, 107), (177, 3), (642, 2)]),
    row(727, &[(563, 121), (281, 3), (726, 2)]),
    row(787, &[(28, 131), (407, 3), (786, 2)]),
    row(967, &[(682, 162), (824, 3), (966, 2)]),
];

/// `<z+1>_3 x <z/2>_m x <-1>_2`, `n < 1000`.
pub const HALVED_ROOT_COVERAGE: &[CoverageRow] = &[
    rooted(31, &[(5, 3), (2, 5), (30, 2)], 1),
    rooted(67, &[(29, 3), (14, 11), (66, 2)], 2),
    rooted(103, &[(56, 3), (79, 17), (102, 2)], 1),
    rooted(151, &[(32, 3), (91, 25), (150, 2)], 1),
    rooted(211, &[(196, 3), (203, 35), (210, 2)], 2),
    rooted(283, &[(44, 3), (163, 47), (282, 2)], 2),
    rooted(691, &[(437, 3), (218, 115), (690, 2)], 2),
    rooted(787, &[(407, 3), (203, 131), (786, 2)], 2),
    rooted(823, &[(648, 3), (735, 137), (822, 2)], 1),
    rooted(907, &[(522, 3), (714, 151), (906, 2)], 2),
];

/// Primes below 1000 in the class `7, 31 (mod 36)` that none of the three
/// root constructions cover.
pub const SEXTIC_UNCOVERED: &[u64] = &[139, 223, 331, 547, 607, 859];

/// Roots for 547: `(x1, x2)` with orders `(n-1)/26` and `(n-1)/13`.
pub const ROOTS_547: (u64, u64) = (505, 39);

/// Primes below 10^5 in the class, then how many each construction covers.
pub const SEXTIC_COUNTS_1E5: (usize, usize, usize, usize) = (1614, 494, 476, 476);

pub struct QuarticRow {
    pub n: u64,
    pub factors: Factors,
    pub root_order: u64,
}

const fn qrow(n: u64, factors: Factors, root_order: u64) -> QuarticRow {
    QuarticRow { n, factors, root_order }
}

/// `<x+1>_3 x <x+1+k>_4 x <x+1+2k>_mu`, `n < 1000`.
pub const QUARTIC_LAST_COVERAGE: &[QuarticRow] = &[
    qrow(61, &[(13, 3), (11, 4), (9, 5)], 15),
    qrow(349, &[(122, 3), (213, 4), (304, 29)], 58),
    qrow(661, &[(364, 3), (106, 4), (509, 55)], 66),
    qrow(661, &[(364, 3), (555, 4), (85, 55)], 66),
];

/// `<x+1-k>_mu x <x+1>_3 x <x+1+k>_4`, `n < 1000`.
pub const QUARTIC_FIRST_COVERAGE: &[QuarticRow] = &[
    qrow(157, &[(153, 13), (12, 3), (28, 4)], 39),
    qrow(229, &[(161, 19), (134, 3), (107, 4)], 228),
    qrow(349, &[(31, 29), (122, 3), (213, 4)], 58),
    qrow(373, &[(91, 31), (284, 3), (104, 4)], 93),
    qrow(997, &[(226, 83), (692, 3), (161, 4)], 498),
];

/// Primes below 1000 in the class `13, 61, 85, 133 (mod 144)` covered by
/// neither quartic construction.
pub const QUARTIC_UNCOVERED: &[u64] = &[277, 421, 709, 733, 853, 877];

/// `<-z-2>_5 x <-1>_2 x <z>_nu`, `n < 1000`.
pub const ORDER5_A: &[CoverageRow] = &[
    row(31, &[(4, 5), (30, 2), (25, 3)]),
    row(191, &[(39, 5), (190, 2), (150, 19)]),
    row(191, &[(184, 5), (190, 2), (5, 19)]),
    row(271, &[(10, 5), (270, 2), (259, 27)]),
    row(271, &[(244, 5), (270, 2), (25, 27)]),
    row(431, &[(405, 5), (430, 2), (24, 43)]),
    row(691, &[(89, 5), (690, 2), (600, 69)]),
    row(991, &[(799, 5), (990, 2), (190, 99)]),
];

/// `<2z+1>_nu x <z>_5 x <-1>_2`, `n < 1000`.
pub const ORDER5_B: &[CoverageRow] = &[
    row(31, &[(5, 3), (2, 5), (30, 2)]),
    row(131, &[(107, 13), (53, 5), (130, 2)]),
    row(311, &[(13, 31), (6, 5), (310, 2)]),
    row(311, &[(105, 31), (52, 5), (310, 2)]),
    row(491, &[(203, 49), (101, 5), (490, 2)]),
    row(811, &[(330, 81), (570, 5), (810, 2)]),
    row(991, &[(395, 99), (197, 5), (990, 2)]),
];

/// `<2z+1>_5 x <z>_nu x <-1>_2`, `n < 1000`.
pub const ORDER5_C: &[CoverageRow] = &[
    row(271, &[(10, 5), (140, 27), (270, 2)]),
    row(691, &[(132, 5), (411, 69), (690, 2)]),
    row(971, &[(803, 5), (401, 97), (970, 2)]),
    row(991, &[(197, 5), (98, 99), (990, 2)]),
];

/// Primes in the class with no decomposition of any of the three forms.
pub const ORDER5_NONE: &[u64] = &[71, 211, 331, 571, 631, 911];

pub struct BarrelRow {
    pub n: u64,
    pub first: Factors,
    pub second: Factors,
}

const fn barrel(n: u64, first: Factors, second: Factors) -> BarrelRow {
    BarrelRow { n, first, second }
}

/// Pairs `<k> x <k+z> x <k+2z> = <k-2z> x <k> x <k+2z>`, primes below 1000.
pub const DOUBLE_BARRELLED_FIRST: &[BarrelRow] = &[
    barrel(67, &[(29, 3), (14, 11), (66, 2)], &[(59, 11), (29, 3), (66, 2)]),
    barrel(211, &[(210, 2), (203, 35), (196, 3)], &[(13, 35), (210, 2), (196, 3)]),
    barrel(271, &[(270, 2), (140, 27), (10, 5)], &[(259, 27), (270, 2), (10, 5)]),
    barrel(331, &[(167, 11), (83, 15), (330, 2)], &[(4, 15), (167, 11), (330, 2)]),
    barrel(379, &[(378, 2), (119, 7), (239, 27)], &[(138, 7), (378, 2), (239, 27)]),
    barrel(661, &[(364, 3), (391, 20), (418, 11)], &[(310, 20), (364, 3), (418, 11)]),
    barrel(787, &[(407, 3), (203, 131), (786, 2)], &[(28, 131), (407, 3), (786, 2)]),
    barrel(907, &[(906, 2), (714, 151), (522, 3)], &[(383, 151), (906, 2), (522, 3)]),
];

/// Pairs `<k> x <k+z> x <k+2z> = <k+z> x <k+2z> x <k+3z>`, primes below 1000.
pub const DOUBLE_BARRELLED_SECOND: &[BarrelRow] = &[
    barrel(349, &[(31, 29), (122, 3), (213, 4)], &[(122, 3), (213, 4), (304, 29)]),
    barrel(599, &[(578, 23), (598, 2), (19, 13)], &[(598, 2), (19, 13), (39, 23)]),
];

/// Lifting examples.
pub const LIFT_U7_WEAK: Factors = &[(4, 3), (6, 2), (1, 1)];
pub const LIFT_U49: Factors = &[(18, 3), (48, 2), (29, 7)];
pub const LIFT_U343: Factors = &[(18, 3), (342, 2), (323, 49)];
pub const LIFT_U379: Factors = &[(239, 27), (378, 2), (138, 7)];
pub const LIFT_U379_SPECIAL: [u64; 3] = [8956, 143640, 134683];
pub const LIFT_U11_WEAK: Factors = &[(10, 2), (1, 1), (3, 5)];
pub const LIFT_U461_WEAK: Factors = &[(1, 1), (48, 4), (95, 115)];
pub const LIFT_U31: Factors = &[(25, 3), (30, 2), (4, 5)];
pub const U961_LIFTS: &[Factors] = &[
    &[(521, 3), (960, 2), (438, 155)],
    &[(521, 3), (526, 62), (531, 5)],
    &[(428, 93), (960, 2), (531, 5)],
];
pub const LIFT_U55_WEAK: Factors = &[(54, 2), (1, 1), (3, 20)];
pub const LIFT_U55_WEAK_OTHER: Factors = &[(52, 20), (54, 2), (1, 1)];
pub const U275_STRONG_LIFTS: &[Factors] = &[
    &[(274, 2), (166, 5), (58, 20)],
    &[(274, 2), (56, 5), (113, 20)],
    &[(274, 2), (221, 5), (168, 20)],
    &[(274, 2), (111, 5), (223, 20)],
];
pub const U605_ORDER_PRESERVING: [u64; 4] = [602, 604, 1, 3];
pub const U155_SPURIOUS: [u64; 3] = [25, 30, 35];
pub const U155_LIFTS: &[Factors] = &[&[(56, 3), (154, 2), (97, 20)], &[(87, 12), (154, 2), (66, 5)]];
/// Prime moduli below 1000 with an unproductive decomposition.
pub const UNPRODUCTIVE_PRIMES: &[u64] = &[11, 379, 461];

pub struct Table3Row {
    pub n: u64,
    pub k: u64,
    pub p: u64,
    pub total: usize,
    pub from_strong: usize,
    pub from_weak: usize,
    pub other: usize,
    pub strong_asterisk: bool,
    pub weak_asterisk: bool,
}

const fn t3(n: u64, k: u64, p: u64, c: [usize; 4], ast: (bool, bool)) -> Table3Row {
    Table3Row {
        n,
        k,
        p,
        total: c[0],
        from_strong: c[1],
        from_weak: c[2],
        other: c[3],
        strong_asterisk: ast.0,
        weak_asterisk: ast.1,
    }
}

const NO: (bool, bool) = (false, false);

/// Decompositions of `U_{kp^2}`, `n < 1000`, split by provenance.
pub const TABLE3: &[Table3Row] = &[
    t3(175, 7, 5, [6, 3, 3, 0], NO),
    t3(245, 5, 7, [6, 3, 3, 0], NO),
    t3(275, 11, 5, [68, 0, 8, 60], NO),
    t3(325, 13, 5, [20, 12, 8, 0], NO),
    t3(425, 17, 5, [8, 0, 8, 0], NO),
    t3(475, 19, 5, [6, 3, 3, 0], NO),
    t3(539, 11, 7, [12, 9, 3, 0], NO),
    t3(575, 23, 5, [2, 0, 2, 0], NO),
    t3(605, 5, 11, [0, 0, 0, 0], (false, true)),
    t3(637, 13, 7, [126, 108, 18, 0], NO),
    t3(725, 29, 5, [30, 18, 12, 0], NO),
    t3(775, 31, 5, [188, 32, 24, 132], NO),
    t3(845, 5, 13, [20, 12, 8, 0], NO),
    t3(847, 7, 11, [0, 0, 0, 0], (true, true)),
    t3(925, 37, 5, [10, 6, 4, 0], NO),
    t3(931, 19, 7, [182, 156, 26, 0], NO),
];

pub const U875_COUNT: usize = 6;

pub struct PqRow {
    pub p: u64,
    pub q: u64,
    pub factors: Factors,
}

const fn pq(p: u64, q: u64, factors: Factors) -> PqRow {
    PqRow { p, q, factors }
}

/// `<-x-2> x <-1>_2 x <x>` with `x = 1 (mod p)`, `x = -3 (mod q)`, `pq < 300`.
pub const PQ_MINUS_THREE: &[PqRow] = &[
    pq(7, 5, &[(11, 3), (34, 2), (22, 4)]),
    pq(7, 11, &[(67, 3), (76, 2), (8, 10)]),
    pq(19, 5, &[(16, 9), (94, 2), (77, 4)]),
    pq(7, 17, &[(18, 3), (118, 2), (99, 16)]),
    pq(31, 5, &[(121, 15), (154, 2), (32, 4)]),
    pq(7, 23, &[(116, 3), (160, 2), (43, 22)]),
    pq(7, 29, &[(88, 3), (202, 2), (113, 28)]),
    pq(19, 11, &[(111, 9), (208, 2), (96, 10)]),
    pq(43, 5, &[(126, 21), (214, 2), (87, 4)]),
];

/// The one failing pair below 300 with `p = 7`, and `ord_41(-3)`.
pub const PQ_MINUS_THREE_FAILURE: (u64, u64, u64) = (7, 41, 8);

pub struct Table1Row {
    pub n: u64,
    pub p: u64,
    pub q: u64,
    pub pairs: &'static [[Factors; 2]],
}

const fn t1(n: u64, p: u64, q: u64, pairs: &'static [[Factors; 2]]) -> Table1Row {
    Table1Row { n, p, q, pairs }
}

/// `<2x+3>_m x <x+1>_3 x <-1>_2 = <-2x-3>_m x <-x-2>_3 x <-1>_2`, `n < 1000`.
pub const TABLE1: &[Table1Row] = &[
    t1(91, 7, 13, &[[&[(33, 12), (16, 3), (90, 2)], &[(58, 12), (74, 3), (90, 2)]]]),
    t1(133, 7, 19, &[[&[(61, 18), (30, 3), (132, 2)], &[(72, 18), (102, 3), (132, 2)]]]),
    t1(217, 7, 31, &[[&[(135, 30), (67, 3), (216, 2)], &[(82, 30), (149, 3), (216, 2)]]]),
    t1(
        247,
        13,
        19,
        &[
            [&[(137, 36), (68, 3), (246, 2)], &[(110, 36), (178, 3), (246, 2)]],
            [&[(175, 36), (87, 3), (246, 2)], &[(72, 36), (159, 3), (246, 2)]],
        ],
    ),
    t1(301, 7, 43, &[[&[(271, 42), (135, 3), (300, 2)], &[(30, 42), (165, 3), (300, 2)]]]),
    t1(403, 13, 31, &[[&[(228, 60), (315, 3), (402, 2)], &[(175, 60), (87, 3), (402, 2)]]]),
    t1(469, 7, 67, &[[&[(142, 66), (305, 3), (468, 2)], &[(327, 66), (163, 3), (468, 2)]]]),
    t1(553, 7, 79, &[[&[(205, 78), (102, 3), (552, 2)], &[(348, 78), (450, 3), (552, 2)]]]),
    t1(559, 13, 43, &[[&[(202, 84), (380, 3), (558, 2)], &[(357, 84), (178, 3), (558, 2)]]]),
    t1(589, 19, 31, &[[&[(547, 90), (273, 3), (588, 2)], &[(42, 90), (315, 3), (588, 2)]]]),
    t1(679, 7, 97, &[[&[(26, 96), (352, 3), (678, 2)], &[(653, 96), (326, 3), (678, 2)]]]),
    t1(721, 7, 103, &[[&[(422, 102), (571, 3), (720, 2)], &[(299, 102), (149, 3), (720, 2)]]]),
    t1(
        763,
        7,
        109,
        &[
            [&[(236, 108), (499, 3), (762, 2)], &[(527, 108), (263, 3), (762, 2)]],
            [&[(345, 108), (172, 3), (762, 2)], &[(418, 108), (590, 3), (762, 2)]],
        ],
    ),
    t1(817, 19, 43, &[[&[(357, 126), (178, 3), (816, 2)], &[(460, 126), (638, 3), (816, 2)]]]),
    t1(
        871,
        13,
        67,
        &[
            [&[(59, 132), (29, 3), (870, 2)], &[(812, 132), (841, 3), (870, 2)]],
            [&[(410, 132), (640, 3), (870, 2)], &[(461, 132), (230, 3), (870, 2)]],
        ],
    ),
    t1(889, 7, 127, &[[&[(674, 126), (781, 3), (888, 2)], &[(215, 126), (107, 3), (888, 2)]]]),
];

/// Moduli in the class with no decomposition of that form.
pub const TABLE1_UNCOVERED: &[u64] = &[259, 427, 511, 973];

pub struct Table2Row {
    pub n: u64,
    pub p: u64,
    pub q: u64,
    pub factors: Factors,
    /// Position of the generator lifted from 1 mod `q`.
    pub starred: usize,
    /// `'A'`, `'B'`, `'C'` or `'-'`.
    pub lift_type: char,
}

const fn t2(p: u64, q: u64, factors: Factors, starred: usize, lift_type: char) -> Table2Row {
    Table2Row { n: p * q, p, q, factors, starred, lift_type }
}

/// Lifts from weak decompositions of `U_q`, `n = pq < 1000`.
pub const TABLE2: &[Table2Row] = &[
    t2(5, 13, &[(27, 4), (44, 4), (61, 3)], 0, 'A'),
    t2(5, 13, &[(53, 4), (57, 4), (61, 3)], 0, 'A'),
    t2(5, 13, &[(53, 4), (16, 3), (44, 4)], 0, 'C'),
    t2(5, 29, &[(88, 4), (12, 4), (81, 7)], 0, 'A'),
    t2(5, 29, &[(117, 4), (99, 4), (81, 7)], 0, 'A'),
    t2(5, 37, &[(43, 4), (112, 4), (181, 9)], 1, 'B'),
    t2(5, 37, &[(38, 4), (16, 9), (179, 4)], 0, 'C'),
    t2(5, 53, &[(213, 4), (201, 13), (189, 4)], 0, 'C'),
    t2(5, 61, &[(123, 4), (56, 15), (294, 4)], 0, 'C'),
    t2(5, 61, &[(62, 4), (24, 20), (291, 3)], 0, '-'),
    t2(5, 61, &[(273, 12), (62, 4), (156, 5)], 1, '-'),
    t2(13, 29, &[(262, 12), (99, 4), (313, 7)], 0, 'A'),
    t2(29, 13, &[(287, 28), (57, 4), (203, 3)], 0, 'A'),
    t2(29, 13, &[(14, 28), (146, 3), (278, 4)], 0, 'C'),
    t2(29, 13, &[(222, 28), (146, 3), (70, 4)], 0, 'C'),
    t2(29, 13, &[(235, 28), (146, 3), (57, 4)], 0, 'C'),
    t2(5, 101, &[(102, 4), (394, 4), (181, 25)], 0, 'A'),
    t2(5, 101, &[(102, 4), (414, 4), (221, 25)], 0, 'A'),
    t2(5, 101, &[(203, 4), (192, 4), (181, 25)], 0, 'A'),
    t2(5, 101, &[(203, 4), (212, 4), (221, 25)], 0, 'A'),
    t2(5, 101, &[(203, 4), (56, 25), (414, 4)], 0, 'C'),
    t2(5, 109, &[(33, 4), (437, 4), (296, 27)], 1, 'B'),
    t2(5, 109, &[(403, 4), (437, 4), (471, 27)], 1, 'B'),
    t2(13, 53, &[(319, 12), (625, 13), (242, 4)], 0, 'C'),
    t2(53, 13, &[(209, 52), (317, 4), (425, 3)], 0, 'A'),
    t2(53, 13, &[(469, 52), (447, 4), (425, 3)], 0, 'A'),
    t2(53, 13, &[(456, 52), (107, 3), (447, 4)], 0, 'C'),
    t2(53, 13, &[(586, 52), (107, 3), (317, 4)], 0, 'C'),
    t2(5, 149, &[(193, 4), (597, 4), (256, 37)], 1, 'B'),
    t2(5, 149, &[(403, 4), (597, 4), (46, 37)], 1, 'B'),
    t2(5, 157, &[(158, 4), (757, 4), (571, 39)], 0, 'A'),
    t2(5, 157, &[(472, 4), (129, 4), (571, 39)], 0, 'A'),
    t2(5, 157, &[(443, 4), (472, 4), (501, 39)], 1, 'B'),
    t2(5, 157, &[(158, 4), (207, 12), (256, 13)], 0, '-'),
    t2(5, 157, &[(158, 4), (326, 3), (494, 52)], 0, '-'),
    t2(5, 173, &[(693, 4), (566, 43), (439, 4)], 0, '-'),
    t2(5, 181, &[(363, 4), (316, 5), (269, 36)], 0, '-'),
    t2(5, 197, &[(183, 4), (592, 4), (16, 49)], 1, 'B'),
];

/// Weak decompositions with orders `{1, 6, p}`, primes below 300.
pub const ORDER6_WEAK: &[(u64, Factors)] = &[
    (43, &[(1, 1), (4, 7), (7, 6)]),
    (67, &[(1, 1), (30, 6), (59, 11)]),
    (79, &[(1, 1), (52, 13), (24, 6)]),
    (103, &[(1, 1), (47, 6), (93, 17)]),
    (139, &[(97, 6), (1, 1), (44, 23)]),
    (223, &[(1, 1), (132, 37), (40, 6)]),
    (223, &[(184, 6), (1, 1), (41, 37)]),
    (283, &[(45, 6), (1, 1), (240, 47)]),
];

pub struct QuartetRow {
    pub n: u64,
    pub lambda: u64,
    pub progressions: [[u64; 4]; 2],
}

const fn quartet(n: u64, lambda: u64, a: [u64; 4], b: [u64; 4]) -> QuartetRow {
    QuartetRow { n, lambda, progressions: [a, b] }
}

/// Two 4-term progressions `[x, y, z, xyz]` per modulus; orders
/// `lambda, 2, 2, lambda`.
pub const QUARTETS: &[QuartetRow] = &[
    quartet(105, 12, [38, 71, 104, 32], [17, 29, 41, 53]),
    quartet(165, 20, [113, 56, 164, 107], [47, 89, 131, 8]),
    quartet(285, 36, [98, 191, 284, 92], [212, 134, 56, 263]),
    quartet(357, 48, [122, 239, 356, 116], [269, 50, 188, 326]),
    quartet(465, 60, [158, 311, 464, 152], [437, 404, 371, 338]),
    quartet(231, 30, [80, 155, 230, 74], [179, 188, 197, 206]),
    quartet(483, 66, [164, 323, 482, 158], [95, 461, 344, 227]),
];

/// A 4-term chain whose end term is not the product of the other three.
pub const QUARTET_CHAIN_315: (u64, u64, Factors) = (315, 12, &[(8, 4), (131, 6), (254, 6), (62, 4)]);

pub struct FieldRow {
    pub p: u64,
    pub k: u32,
    /// Powers of the primitive root with their orders.
    pub factors: &'static [(u64, u64)],
}

/// One decomposition per order list, `(exponent, order)`.
pub const FIELD_DECOMPOSITIONS: &[FieldRow] = &[
    FieldRow { p: 11, k: 2, factors: &[(72, 5), (15, 8), (80, 3)] },
    FieldRow { p: 11, k: 3, factors: &[(570, 7), (532, 5), (595, 38)] },
    FieldRow { p: 11, k: 3, factors: &[(665, 2), (1008, 95), (570, 7)] },
    FieldRow { p: 19, k: 2, factors: &[(144, 5), (320, 9), (135, 8)] },
    FieldRow { p: 19, k: 3, factors: &[(3429, 2), (2970, 127), (5588, 27)] },
    FieldRow { p: 23, k: 2, factors: &[(176, 3), (192, 11), (429, 16)] },
    FieldRow { p: 29, k: 2, factors: &[(280, 3), (720, 7), (609, 40)] },
    FieldRow { p: 29, k: 2, factors: &[(120, 7), (504, 5), (385, 24)] },
];

/// Orders with no decomposition in `GF(11^3)`.
pub const GF11_3_IMPOSSIBLE: [u64; 3] = [2, 5, 133];

pub const U104_STRONG_4AP: &[Factors] = &[
    &[(31, 4), (81, 3), (27, 2), (77, 2)],
    &[(77, 2), (79, 2), (81, 3), (83, 4)],
];
pub const U3613_WEAK_4AP: Factors = &[(3528, 4), (1148, 129), (2381, 7), (1, 1)];
pub const FOUR_AP_PRIME_LIMIT: u64 = 10_000;
