//! Built-in generator catalogue.
//!
//! Every named matrix is embedded as a literal integer table (scaled by a
//! power of two, with a separate 1/sqrt2 family for the Hadamard-like
//! entries). `build` recomputes the content hash against the frozen table
//! below and runs the exact unitarity check before handing the matrix out,
//! so any accidental edit of the data aborts loudly with the matrix name.

use crate::dyadic::DyadicComplex;
use crate::matrix::{ExactMatrix, MatrixError};

fn from_gaussian_table(re: &[&[i64]], im: &[&[i64]], den_pow: u32) -> ExactMatrix {
    let dim = re.len();
    let mut m = ExactMatrix::from_entries(dim, vec![DyadicComplex::zero(); dim * dim]);
    for r in 0..dim {
        for c in 0..dim {
            m.set_entry(r, c, DyadicComplex::gaussian(re[r][c], im[r][c], den_pow));
        }
    }
    m
}

/// Entries are value/sqrt2, i.e. scalar (0 + v*sqrt2)/2.
fn from_inv_sqrt2_table(table: &[&[i64]]) -> ExactMatrix {
    let dim = table.len();
    let mut m = ExactMatrix::from_entries(dim, vec![DyadicComplex::zero(); dim * dim]);
    for r in 0..dim {
        for c in 0..dim {
            m.set_entry(r, c, DyadicComplex::real_parts(0, table[r][c], 1));
        }
    }
    m
}

fn sigma_x() -> ExactMatrix {
    ExactMatrix::from_int_table(&[&[0, 1], &[1, 0]], 0)
}

fn sigma_y() -> ExactMatrix {
    from_gaussian_table(&[&[0, 0], &[0, 0]], &[&[0, -1], &[1, 0]], 0)
}

fn sigma_z() -> ExactMatrix {
    ExactMatrix::from_int_table(&[&[1, 0], &[0, -1]], 0)
}

fn gamma_0() -> ExactMatrix {
    ExactMatrix::from_int_table(
        &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -1]],
        0,
    )
}

/// Off-diagonal block form [[0, s], [-s, 0]] used by the three spatial
/// gamma matrices.
fn gamma_block(s: &ExactMatrix) -> ExactMatrix {
    let mut m = ExactMatrix::from_entries(4, vec![DyadicComplex::zero(); 16]);
    for r in 0..2 {
        for c in 0..2 {
            m.set_entry(r, c + 2, s.entry(r, c).clone());
            m.set_entry(r + 2, c, s.entry(r, c).neg());
        }
    }
    m
}

fn scale_i(m: &ExactMatrix) -> ExactMatrix {
    let dim = m.dim();
    let i = DyadicComplex::i();
    let mut out = ExactMatrix::from_entries(dim, vec![DyadicComplex::zero(); dim * dim]);
    for r in 0..dim {
        for c in 0..dim {
            out.set_entry(r, c, i.mul(m.entry(r, c)));
        }
    }
    out
}

const S_TABLE: [&[i64]; 4] = [
    &[1, -1, 1, 1],
    &[1, 1, -1, 1],
    &[1, -1, -1, -1],
    &[1, 1, 1, -1],
];

const R_TABLE: [&[i64]; 4] = [
    &[1, 0, 0, 1],
    &[0, 1, -1, 0],
    &[0, 1, 1, 0],
    &[-1, 0, 0, 1],
];

const I3_TABLE: [&[i64]; 8] = [
    &[0, -1, 1, 0, 0, 0, -1, -1],
    &[1, 0, 0, -1, 1, 1, 0, 0],
    &[-1, 0, 0, -1, -1, 1, 0, 0],
    &[0, 1, 1, 0, 0, 0, 1, -1],
    &[0, -1, 1, 0, 0, 0, 1, 1],
    &[0, -1, -1, 0, 0, 0, 1, -1],
    &[1, 0, 0, -1, -1, -1, 0, 0],
    &[1, 0, 0, 1, -1, 1, 0, 0],
];

const J3_TABLE: [&[i64]; 8] = [
    &[0, 1, 1, 1, 1, 0, 0, 0],
    &[-1, 0, 0, 0, 0, 1, 1, -1],
    &[-1, 0, 0, 0, 0, -1, -1, -1],
    &[-1, 0, 0, 0, 0, -1, 1, 1],
    &[-1, 0, 0, 0, 0, 1, -1, 1],
    &[0, -1, 1, 1, -1, 0, 0, 0],
    &[0, -1, 1, -1, 1, 0, 0, 0],
    &[0, 1, 1, -1, -1, 0, 0, 0],
];

const K3_TABLE: [&[i64]; 8] = [
    &[1, 0, 0, 0, 0, 1, 1, 1],
    &[0, -1, 1, 1, -1, 0, 0, 0],
    &[0, 1, 1, 1, 1, 0, 0, 0],
    &[0, 1, 1, -1, -1, 0, 0, 0],
    &[0, -1, 1, -1, 1, 0, 0, 0],
    &[1, 0, 0, 0, 0, -1, -1, 1],
    &[1, 0, 0, 0, 0, -1, 1, -1],
    &[1, 0, 0, 0, 0, 1, -1, -1],
];

const X_TABLE: [&[i64]; 8] = [
    &[1, -1, 0, 0, 0, 0, 1, 1],
    &[1, 1, 0, 0, 0, 0, -1, 1],
    &[0, 0, 1, 1, -1, 1, 0, 0],
    &[0, 0, -1, 1, -1, -1, 0, 0],
    &[0, 0, 1, 1, 1, -1, 0, 0],
    &[0, 0, -1, 1, 1, 1, 0, 0],
    &[-1, 1, 0, 0, 0, 0, 1, 1],
    &[-1, -1, 0, 0, 0, 0, -1, 1],
];

const Y_TABLE: [&[i64]; 8] = [
    &[1, 0, -1, 0, 0, -1, 0, -1],
    &[0, 1, 0, 1, 1, 0, -1, 0],
    &[1, 0, 1, 0, 0, -1, 0, 1],
    &[0, -1, 0, 1, -1, 0, -1, 0],
    &[0, -1, 0, 1, 1, 0, 1, 0],
    &[1, 0, 1, 0, 0, 1, 0, -1],
    &[0, 1, 0, 1, -1, 0, 1, 0],
    &[1, 0, -1, 0, 0, 1, 0, 1],
];

const W_TABLE: [&[i64]; 8] = [
    &[0, 0, 0, -1, 0, 1, -1, 1],
    &[0, 0, 0, -1, 0, -1, 1, 1],
    &[0, 0, 0, -1, 0, 1, 1, -1],
    &[1, 1, 1, 0, 1, 0, 0, 0],
    &[0, 0, 0, -1, 0, -1, -1, -1],
    &[-1, 1, -1, 0, 1, 0, 0, 0],
    &[1, -1, -1, 0, 1, 0, 0, 0],
    &[-1, -1, 1, 0, 1, 0, 0, 0],
];

const Z_TABLE: [&[i64]; 8] = [
    &[0, -1, 0, -1, 1, -1, 0, 0],
    &[1, 0, 1, 0, 0, 0, 1, -1],
    &[0, -1, 0, 1, 1, 1, 0, 0],
    &[1, 0, -1, 0, 0, 0, -1, -1],
    &[-1, 0, -1, 0, 0, 0, 1, -1],
    &[1, 0, -1, 0, 0, 0, 1, 1],
    &[0, -1, 0, 1, -1, -1, 0, 0],
    &[0, 1, 0, 1, 1, -1, 0, 0],
];

const C_TABLE: [&[i64]; 8] = [
    &[1, 0, -1, -1, 0, 1, 0, 0],
    &[0, -1, 0, 0, -1, 0, -1, -1],
    &[-1, 0, 1, -1, 0, 1, 0, 0],
    &[-1, 0, -1, 1, 0, 1, 0, 0],
    &[0, -1, 0, 0, -1, 0, 1, 1],
    &[1, 0, 1, 1, 0, 1, 0, 0],
    &[0, -1, 0, 0, 1, 0, -1, 1],
    &[0, -1, 0, 0, 1, 0, 1, -1],
];

const ZPRIME_TABLE: [&[i64]; 8] = [
    &[0, 0, -1, 0, -1, -1, -1, 0],
    &[0, 0, 1, 0, 1, -1, -1, 0],
    &[1, -1, 0, -1, 0, 0, 0, 1],
    &[0, 0, 1, 0, -1, 1, -1, 0],
    &[1, -1, 0, 1, 0, 0, 0, -1],
    &[1, 1, 0, -1, 0, 0, 0, -1],
    &[1, 1, 0, 1, 0, 0, 0, 1],
    &[0, 0, -1, 0, 1, 1, -1, 0],
];

const G1_R1: [&[i64]; 4] = [
    &[-1, 0, 0, 1],
    &[0, 1, -1, 0],
    &[0, -1, 1, 0],
    &[1, 0, 0, -1],
];

const G1_R2: [&[i64]; 4] = [
    &[1, 0, 0, 1],
    &[0, -1, -1, 0],
    &[0, -1, -1, 0],
    &[1, 0, 0, 1],
];

const C1_TABLE: [&[i64]; 8] = [
    &[0, 1, 0, -1, -1, -1, 0, 0],
    &[-1, 0, 1, 0, 0, 0, 1, 1],
    &[0, -1, 0, 1, -1, -1, 0, 0],
    &[1, 0, -1, 0, 0, 0, 1, 1],
    &[1, 0, 1, 0, 0, 0, -1, 1],
    &[1, 0, 1, 0, 0, 0, 1, -1],
    &[0, -1, 0, -1, 1, -1, 0, 0],
    &[0, -1, 0, -1, -1, 1, 0, 0],
];

const C2_TABLE: [&[i64]; 8] = [
    &[0, 1, 0, 1, 0, 0, -1, 1],
    &[-1, 0, -1, 0, 1, -1, 0, 0],
    &[0, 1, 0, 1, 0, 0, 1, -1],
    &[-1, 0, -1, 0, -1, 1, 0, 0],
    &[0, -1, 0, 1, 0, 0, 1, 1],
    &[0, 1, 0, -1, 0, 0, 1, 1],
    &[1, 0, -1, 0, -1, -1, 0, 0],
    &[-1, 0, 1, 0, -1, -1, 0, 0],
];

const U_TABLE: [&[i64]; 8] = [
    &[0, -1, 0, 0, 0, 0, 0, 0],
    &[-1, 0, 0, 0, 0, 0, 0, 0],
    &[0, 0, 0, -1, 0, 0, 0, 0],
    &[0, 0, -1, 0, 0, 0, 0, 0],
    &[0, 0, 0, 0, 0, 0, -1, 0],
    &[0, 0, 0, 0, 0, 0, 0, -1],
    &[0, 0, 0, 0, -1, 0, 0, 0],
    &[0, 0, 0, 0, 0, -1, 0, 0],
];

/// 8x8 assembled from two 4x4 blocks as [[a, b], [b, a]], scaled by 1/2.
fn block_2x2(a: &[&[i64]; 4], b: &[&[i64]; 4], negate_off_diag: bool) -> ExactMatrix {
    let mut m = ExactMatrix::from_entries(8, vec![DyadicComplex::zero(); 64]);
    let sign = if negate_off_diag { -1 } else { 1 };
    for r in 0..4 {
        for c in 0..4 {
            m.set_entry(r, c, DyadicComplex::gaussian(a[r][c], 0, 1));
            m.set_entry(r + 4, c + 4, DyadicComplex::gaussian(a[r][c], 0, 1));
            m.set_entry(r, c + 4, DyadicComplex::gaussian(sign * b[r][c], 0, 1));
            m.set_entry(r + 4, c, DyadicComplex::gaussian(sign * b[r][c], 0, 1));
        }
    }
    m
}

fn permutation_matrix(dim: usize, images: &[usize]) -> ExactMatrix {
    let mut m = ExactMatrix::from_entries(dim, vec![DyadicComplex::zero(); dim * dim]);
    for (col, &row) in images.iter().enumerate() {
        m.set_entry(row, col, DyadicComplex::one());
    }
    m
}

fn build_raw(name: &str) -> Result<ExactMatrix, MatrixError> {
    let m = match name {
        "sigma_x" => sigma_x(),
        "sigma_y" => sigma_y(),
        "sigma_z" => sigma_z(),
        "gamma_0" => gamma_0(),
        "gamma_1" => gamma_block(&sigma_x()),
        "gamma_2" => gamma_block(&sigma_y()),
        "gamma_3" => gamma_block(&sigma_z()),
        "gamma_5" => sigma_x().tensor(&ExactMatrix::identity(2)),
        "P" => scale_i(&gamma_0()),
        "C" => scale_i(&build_raw("gamma_2")?.mul(&gamma_0()).expect("4x4")),
        "T_timereversal" => build_raw("gamma_3")?.mul(&build_raw("gamma_1")?).expect("4x4"),
        "H" => from_inv_sqrt2_table(&[&[1, 1], &[1, -1]]),
        "R" => from_inv_sqrt2_table(&R_TABLE),
        "S" => ExactMatrix::from_int_table(&S_TABLE, 1),
        "swap" => permutation_matrix(4, &[0, 2, 1, 3]),
        "CZ" => ExactMatrix::from_int_table(
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]],
            0,
        ),
        "CNOT" => permutation_matrix(4, &[0, 1, 3, 2]),
        "TOF" => permutation_matrix(8, &[0, 1, 2, 3, 4, 5, 7, 6]),
        "Fredkin" => permutation_matrix(8, &[0, 1, 2, 3, 4, 6, 5, 7]),
        "i3" => ExactMatrix::from_int_table(&I3_TABLE, 1),
        "j3" => ExactMatrix::from_int_table(&J3_TABLE, 1),
        "K3" => ExactMatrix::from_int_table(&K3_TABLE, 1),
        "x" => ExactMatrix::from_int_table(&X_TABLE, 1),
        "y" => ExactMatrix::from_int_table(&Y_TABLE, 1),
        "W" => ExactMatrix::from_int_table(&W_TABLE, 1),
        "Z" => ExactMatrix::from_int_table(&Z_TABLE, 1),
        "c" => ExactMatrix::from_int_table(&C_TABLE, 1),
        "Zprime" => ExactMatrix::from_int_table(&ZPRIME_TABLE, 1),
        "g1" => block_2x2(&G1_R1, &G1_R2, false),
        "g2" => block_2x2(&G1_R1, &G1_R2, true),
        "c1" => ExactMatrix::from_int_table(&C1_TABLE, 1),
        "c2" => ExactMatrix::from_int_table(&C2_TABLE, 1),
        "u" => ExactMatrix::from_int_table(&U_TABLE, 0),
        "1⊗CZ" | "1xCZ" => ExactMatrix::identity(2).tensor(&build_raw("CZ")?),
        "1⊗S" | "1xS" => ExactMatrix::identity(2).tensor(&build_raw("S")?),
        "S⊗1" | "Sx1" => build_raw("S")?.tensor(&ExactMatrix::identity(2)),
        "1⊗swap" | "1xswap" => ExactMatrix::identity(2).tensor(&build_raw("swap")?),
        "swap⊗1" | "swapx1" => build_raw("swap")?.tensor(&ExactMatrix::identity(2)),
        _ => return Err(MatrixError::UnknownMatrix(name.to_string())),
    };
    Ok(m)
}

/// Frozen sha256 of each catalogue entry's canonical serialization.
const CHECKSUMS: [(&str, &str); 38] = [
    ("1⊗CZ", "487642be2515c47cfde23bad59da85d4700141f4b550c0f4d386d77bc05fbc7f"),
    ("1⊗S", "9b53ffae217b62b0e04e84b2e9a65137231ee090ff30e9ce9e54ff7ffc2fe0b5"),
    ("1⊗swap", "aaec6e5a9a44e1fa332c2273decc8679a2eaaf556075e88d616a5096525c3b62"),
    ("C", "15eb56dad2d9492e7f7903531918443773fc0818e1bc3d18c2b3af5a5a564b93"),
    ("CNOT", "6cecca97bb0835c1f6587082cd3c990d5e17ca291db72895ec7a5ce196c5a64d"),
    ("CZ", "ecde307c257c3ab18e2dab76caafb6bb98489e091230df01bacee884c1561e13"),
    ("Fredkin", "041f8a57e7017206703ce9db59ee270837002bd54204dbebfca58c01c19c9e1f"),
    ("H", "91de4594ad107189bed243e223e1802e92ac52dc271cae4dbe7aa03e621e3cfe"),
    ("K3", "f7fe6329bd3487d94d1eab3ed48b0a4b4a62cdd3b1287efb74c3095a28f0e7dd"),
    ("P", "e28fe6ee4ad680dc9bd6993f45111d4a59652bb54a5fcb18f3c58f1deb816271"),
    ("R", "60c64f7cb8dc6e78b576fdd0b8bdf7a5c544af354de69f81a45321253c1589b5"),
    ("S", "0a14c4b194312682aa426e7c1251c2a1d6c37e84922abbc58eae1f3e5fe26f9c"),
    ("S⊗1", "cbbc668675a0ca097e4dc777687f2526d36c53818ebf716cab775148a2cac5bb"),
    ("TOF", "027fbf959ec72f0b559752267978e75b28750ec0dcaebabf66c4d72ad7ef7de0"),
    ("T_timereversal", "a4920763ba36fc49f0cf0edfab6684fb2cf15cf4f804e562dabbb1ca2f8eae5d"),
    ("W", "6aef46a3bfcf7f4324c19ae14f97d87190892848e69d2e96aa574c5fba8e29b5"),
    ("Z", "9e954e7e045ea08cd9d8cf2291ff7a4ab4d6e871f4240a8a7073b7212738ec06"),
    ("Zprime", "eb01ab2f3d81bf751c5aa3bd6404b6b5ae80610aa00101bc554e3d76fa09be2d"),
    ("c", "f410b4cf59354af6bf83f69839e1d1144f2747e12d0ef8e14f0a87b435e8f3ca"),
    ("c1", "07799316d2e081bb3f182197ce09f9d1c72ef73b336c379d37be5a1b1b6cb418"),
    ("c2", "beff99ce16e1f82cb01c3e575971cc1676e850d681301071c5f6866a2f89134c"),
    ("g1", "1c69a52021c113c20f59542c0cf53fd28e0baeae63522dce0a4c1230e4bd48d3"),
    ("g2", "8c37a20f829fcd4fabf1acd80b27f08c60d8014beeabcdef69cb24755baee57e"),
    ("gamma_0", "5093e74d0cc3b4be2852b500b4c076b85a1f795afeec8733c9423c983b522c17"),
    ("gamma_1", "5ec72bf2a0ed2ad21a5d1fc0c9296ce23c67a52d5e8217d1f629b83dc677afea"),
    ("gamma_2", "2adbc04e6d00def2fad38e4181a8f3738c38459fb529088de08d60671c61821c"),
    ("gamma_3", "ad1d8d815fb6a79e2f5f31aff05cbe5d47981bb68c3919824a9ed012bfba3194"),
    ("gamma_5", "0d08711e7f905cd150565936e8b50a81606bcfbc50e63298f16983ce8a62650e"),
    ("i3", "4f4ce3fe9c5d2725c9395a0f3a007b13bbcdd0043efb897f3a694273fac7f497"),
    ("j3", "e1f5b67b209528ed7bd8bf65e37652e7d6655c5ac0afce1945b4fc1f64d4b718"),
    ("sigma_x", "f5716ed31df35e95186f9cc07c0b7dc3cc087eafbb1f2ea6090067bf7a6e7ff3"),
    ("sigma_y", "5ffab9f3fbabcd9d4c7f35402e203abae7e261201c14e7bd2afdedad9899e081"),
    ("sigma_z", "35d0e960c9a15fef462c0b213ebafd5196d6f02c17bf3389f8051713baf445d6"),
    ("swap", "e58754b12ddcbaf7dcd8ac4e6fc15ab2fbf64da003df0d1da361820c61b22816"),
    ("swap⊗1", "86df45c3004a320f2b1907035f49e2325c288437d3ba4e57d32f08bc425b0d27"),
    ("u", "dc51f07f79fbb8a0ebfbfe025e89ac2e7315b253d9319dc914c4cdf5320624b0"),
    ("x", "af5ff2fcaacd58c189de3e237e082edb51a8e11a9c0421095ad385be4bb04e48"),
    ("y", "d76e20eb0a3adf12939318cc47199cfa489ea128bc23354a1f8859da721d8b14"),
];

/// Canonical catalogue names in listing order.
pub const NAMES: [&str; 38] = [
    "sigma_x", "sigma_y", "sigma_z",
    "gamma_0", "gamma_1", "gamma_2", "gamma_3", "gamma_5",
    "P", "C", "T_timereversal",
    "H", "R", "S",
    "swap", "CZ", "CNOT", "TOF", "Fredkin",
    "i3", "j3", "K3",
    "x", "y",
    "W", "Z", "c", "Zprime",
    "g1", "g2", "c1", "c2", "u",
    "1⊗CZ", "1⊗S", "S⊗1", "1⊗swap", "swap⊗1",
];

fn canonical_name(name: &str) -> &str {
    match name {
        "1xCZ" => "1⊗CZ",
        "1xS" => "1⊗S",
        "Sx1" => "S⊗1",
        "1xswap" => "1⊗swap",
        "swapx1" => "swap⊗1",
        other => other,
    }
}

/// Build a catalogue matrix by name, verifying the frozen content hash and
/// exact unitarity. ASCII aliases (`1xCZ` for `1⊗CZ`, ...) are accepted.
pub fn build(name: &str) -> Result<ExactMatrix, MatrixError> {
    let canon = canonical_name(name);
    let m = build_raw(canon)?;
    let computed = m.content_hash();
    if let Some((_, stored)) = CHECKSUMS.iter().find(|(n, _)| *n == canon) {
        if *stored != computed {
            return Err(MatrixError::ChecksumMismatch {
                name: canon.to_string(),
                stored: stored.to_string(),
                computed,
            });
        }
    }
    if let Some((row, col)) = m.unitarity_defect() {
        return Err(MatrixError::TranscriptionNotUnitary {
            name: canon.to_string(),
            row,
            col,
        });
    }
    Ok(m.named(canon))
}

/// Build several catalogue matrices at once.
pub fn build_all(names: &[&str]) -> Result<Vec<ExactMatrix>, MatrixError> {
    names.iter().map(|n| build(n)).collect()
}
