//! Published reference values reproduced by the harness.

/// `(n, k, distribution of area_k over PF_{n,k})`, as typeset.
pub const AREA_K_TABLE: [(usize, usize, &str); 15] = [
    (1, 0, "1"),
    (2, 0, "q+2"),
    (2, 1, "2q+2"),
    (3, 0, "q^3+3q^2+6q+6"),
    (3, 1, "2q^3+7q^2+9q+6"),
    (3, 2, "3q^3+9q^2+9q+6"),
    (4, 0, "q^6 + 4q^5 + 10q^4 + 20q^3 + 30q^2 + 36q + 24"),
    (4, 1, "2q^6 + 9q^5 + 24q^4 + 41q^3 + 53q^2 + 50q + 24"),
    (4, 2, "3q^6 + 13q^5 + 34q^4 + 58q^3 + 60q^2 + 48q + 24"),
    (4, 3, "4q^6 + 16q^5 + 40q^4 + 64q^3 + 60q^2 + 48q + 24"),
    (5, 0, "q^{10} + 5q^9 + 15q^8 + 35q^7 + 70q^6 + 120q^5 + 180q^4 + 240q^3 + 270q^2 + 240q + 120"),
    (5, 1, "2q^{10} + 11q^9 + 35q^8 + 84q^7 + 165q^6 + 263q^5 + 361q^4 + 429q^3 + 435q^2 + 320q + 120"),
    (5, 2, "3q^{10} + 16q^9 + 50q^8 + 121q^7 + 238q^6 + 384q^5 + 502q^4 + 529q^3 + 462q^2 + 306q + 120"),
    (5, 3, "4q^{10} + 21q^9 + 65q^8 + 155q^7 + 295q^6 + 464q^5 + 576q^4 + 550q^3 + 450q^2 + 300q + 120"),
    (5, 4, "5q^{10} + 25q^9 + 75q^8 + 175q^7 + 325q^6 + 500q^5 + 600q^4 + 550q^3 + 450q^2 + 300q + 120"),
];

/// Fiber-size generating functions `F_1 .. F_5` as `(fiber size, number of permutations)`.
pub const FIBER_SERIES: [&[(u128, u64)]; 5] = [
    &[(1, 1)],
    &[(1, 1), (2, 1)],
    &[(1, 1), (2, 3), (3, 1), (6, 1)],
    &[(1, 1), (2, 6), (3, 4), (4, 4), (6, 4), (8, 3), (12, 1), (24, 1)],
    &[
        (1, 1),
        (2, 10),
        (3, 10),
        (4, 20),
        (5, 1),
        (6, 20),
        (8, 15),
        (10, 6),
        (12, 15),
        (15, 4),
        (20, 4),
        (24, 5),
        (30, 4),
        (40, 3),
        (60, 1),
        (120, 1),
    ],
];

/// The typeset row with whitespace removed, which is the emitter's spelling.
pub fn compact(row: &str) -> String {
    row.chars().filter(|c| !c.is_whitespace()).collect()
}
