//! The built-in claim registry: group orders, identification labels,
//! cross-representation fingerprint matches, subgroup structure, matrix
//! identities and entanglement profiles, each with a frozen expected value.

use num_traits::ToPrimitive;

use crate::catalogue;
use crate::group::subgroups::all_subgroups;
use crate::group::{
    fingerprint_set, identify, verify_joint_eigenstates, ElementSet, GroupFingerprint,
    Identification, MatrixGroup,
};
use crate::matrix::ExactMatrix;
use crate::tangle::{
    concurrence_spectrum, one_tangle, profile, reduce, state_from_row, three_tangle,
    EntanglementProfile, Pair, PureState3, Qubit,
};

use super::runner::RunContext;
use super::{Claim, ClaimValue, ProfileSummary, Severity};

/// Enumeration cap for groups identified by full closure; the largest such
/// group here has 120 elements.
const SMALL_CAP: usize = 4096;

/// Order of the full three-qubit reflection group reached by inflation.
const FULL_REFLECTION_ORDER: u64 = 696_729_600;

/// Internal tolerance for checking that the rows of one generator share a
/// single profile; tighter than the claim comparison tolerance on purpose.
const ROW_UNIFORMITY: f64 = 1e-9;

fn claim<F>(
    id: &'static str,
    description: &'static str,
    severity: Severity,
    expected: ClaimValue,
    compute: F,
) -> Claim
where
    F: Fn(&RunContext) -> Result<ClaimValue, String> + Send + Sync + 'static,
{
    Claim {
        id,
        description,
        severity,
        expected,
        compute: Box::new(compute),
    }
}

fn enumerate_names(names: &[&str], cap: usize) -> Result<ElementSet, String> {
    MatrixGroup::from_catalogue(names)
        .and_then(|g| g.enumerate(cap))
        .map_err(|e| e.to_string())
}

fn enumerate_gens(dim: usize, gens: Vec<ExactMatrix>, cap: usize) -> Result<ElementSet, String> {
    MatrixGroup::new(dim, gens)
        .and_then(|g| g.enumerate(cap))
        .map_err(|e| e.to_string())
}

fn label_of(set: &ElementSet) -> Result<String, String> {
    let fp = fingerprint_set(set).map_err(|e| e.to_string())?;
    Ok(match identify(&fp) {
        Identification::Consistent { label } => label.to_string(),
        Identification::Unknown { order } => format!("unrecognized order {order}"),
    })
}

fn fingerprint_names(names: &[&str]) -> Result<GroupFingerprint, String> {
    let set = enumerate_names(names, SMALL_CAP)?;
    fingerprint_set(&set).map_err(|e| e.to_string())
}

fn order_claim(
    id: &'static str,
    description: &'static str,
    names: &'static [&'static str],
    expected: u64,
) -> Claim {
    claim(
        id,
        description,
        Severity::Assert,
        ClaimValue::Count(expected),
        move |ctx| Ok(ClaimValue::Count(ctx.order_u64(names)?)),
    )
}

fn label_claim(
    id: &'static str,
    description: &'static str,
    names: &'static [&'static str],
    expected: &str,
) -> Claim {
    claim(
        id,
        description,
        Severity::Assert,
        ClaimValue::Text(expected.to_string()),
        move |_| {
            let set = enumerate_names(names, SMALL_CAP)?;
            Ok(ClaimValue::Text(label_of(&set)?))
        },
    )
}

/// The two Pauli tensor triples of commuting two-qubit observables, in the
/// column order their sign tables use.
fn tensor_square(name: &str) -> Result<ExactMatrix, String> {
    let m = catalogue::build(name).map_err(|e| e.to_string())?;
    Ok(m.tensor(&m))
}

fn tensor_pair(left: &str, right: &str) -> Result<ExactMatrix, String> {
    let l = catalogue::build(left).map_err(|e| e.to_string())?;
    let r = catalogue::build(right).map_err(|e| e.to_string())?;
    Ok(l.tensor(&r))
}

fn first_triple() -> Result<Vec<ExactMatrix>, String> {
    Ok(vec![
        tensor_square("sigma_z")?,
        tensor_square("sigma_x")?,
        tensor_square("sigma_y")?,
    ])
}

fn second_triple() -> Result<Vec<ExactMatrix>, String> {
    Ok(vec![
        tensor_pair("sigma_x", "sigma_z")?,
        tensor_pair("sigma_z", "sigma_x")?,
        tensor_square("sigma_y")?,
    ])
}

fn six_observables() -> Result<Vec<ExactMatrix>, String> {
    let mut v = first_triple()?;
    v.extend(second_triple()?);
    Ok(v)
}

/// The six one-sided Pauli tensors generating the two-qubit Pauli group.
/// Both sigma_y factors are required: without them the generators are all
/// real and close into the order-32 central product instead.
fn two_qubit_pauli_generators() -> Result<Vec<ExactMatrix>, String> {
    let one = ExactMatrix::identity(2);
    let mut gens = Vec::new();
    for name in ["sigma_x", "sigma_y", "sigma_z"] {
        let s = catalogue::build(name).map_err(|e| e.to_string())?;
        gens.push(s.tensor(&one));
        gens.push(one.tensor(&s));
    }
    Ok(gens)
}

fn profiles_agree(a: &EntanglementProfile, b: &EntanglementProfile) -> bool {
    let close = |x: f64, y: f64| (x - y).abs() <= ROW_UNIFORMITY;
    a.class_label == b.class_label
        && close(a.tau3, b.tau3)
        && a.pairwise()
            .iter()
            .zip(&b.pairwise())
            .all(|(x, y)| close(*x, *y))
        && a.one_tangles()
            .iter()
            .zip(&b.one_tangles())
            .all(|(x, y)| close(*x, *y))
}

/// Profile shared by all rows of a catalogue matrix; errors if any row
/// deviates from row 0.
fn uniform_row_profile(name: &str) -> Result<ProfileSummary, String> {
    let m = catalogue::build(name).map_err(|e| e.to_string())?;
    let mut first: Option<EntanglementProfile> = None;
    for row in 0..m.dim() {
        let state = state_from_row(&m, row).map_err(|e| e.to_string())?;
        let p = profile(&state).map_err(|e| e.to_string())?;
        match &first {
            None => first = Some(p),
            Some(f) => {
                if !profiles_agree(f, &p) {
                    return Err(format!("rows 0 and {row} of {name} have different profiles"));
                }
            }
        }
    }
    let f = first.expect("catalogue matrices are nonempty");
    Ok(ProfileSummary {
        class: f.class_label.as_str().to_string(),
        tau3: f.tau3,
        pairwise: f.pairwise(),
        ones: Some(f.one_tangles()),
    })
}

fn profile_claim(
    id: &'static str,
    description: &'static str,
    name: &'static str,
    severity: Severity,
    expected: ProfileSummary,
) -> Claim {
    claim(id, description, severity, ClaimValue::Profile(expected), move |_| {
        Ok(ClaimValue::Profile(uniform_row_profile(name)?))
    })
}

fn row_class_claim(
    id: &'static str,
    description: &'static str,
    name: &'static str,
    severity: Severity,
    expected: &str,
) -> Claim {
    claim(
        id,
        description,
        severity,
        ClaimValue::Text(expected.to_string()),
        move |_| Ok(ClaimValue::Text(uniform_row_profile(name)?.class)),
    )
}

/// Concurrence spectrum shared by every pair reduction of every row of a
/// catalogue matrix; errors unless uniform.
fn uniform_pair_spectrum(name: &str) -> Result<Vec<f64>, String> {
    let m = catalogue::build(name).map_err(|e| e.to_string())?;
    let mut reference: Option<[f64; 4]> = None;
    for row in 0..m.dim() {
        let state = state_from_row(&m, row).map_err(|e| e.to_string())?;
        for pair in Pair::ALL {
            let spectrum = concurrence_spectrum(&reduce(&state, pair))
                .map_err(|e| e.to_string())?
                .lambdas();
            match &reference {
                None => reference = Some(spectrum),
                Some(r) => {
                    let uniform = r
                        .iter()
                        .zip(&spectrum)
                        .all(|(a, b)| (a - b).abs() <= ROW_UNIFORMITY);
                    if !uniform {
                        return Err(format!(
                            "row {row} pair {} of {name} breaks the uniform spectrum",
                            pair.as_str()
                        ));
                    }
                }
            }
        }
    }
    Ok(reference.expect("catalogue matrices are nonempty").to_vec())
}

fn spectrum_claim(
    id: &'static str,
    description: &'static str,
    name: &'static str,
    expected: Vec<f64>,
) -> Claim {
    claim(
        id,
        description,
        Severity::Assert,
        ClaimValue::Reals(expected),
        move |_| Ok(ClaimValue::Reals(uniform_pair_spectrum(name)?)),
    )
}

fn catalogue_group(names: &[&str]) -> Result<MatrixGroup, String> {
    MatrixGroup::from_catalogue(names).map_err(|e| e.to_string())
}

fn normality_claim(
    id: &'static str,
    description: &'static str,
    sub: &'static [&'static str],
    sup: &'static [&'static str],
) -> Claim {
    claim(id, description, Severity::Assert, ClaimValue::Flag(true), move |_| {
        let sub = catalogue_group(sub)?;
        let sup = catalogue_group(sup)?;
        Ok(ClaimValue::Flag(
            sub.is_normal_in(&sup).map_err(|e| e.to_string())?,
        ))
    })
}

fn cpt_row_profile() -> ProfileSummary {
    ProfileSummary {
        class: "CPT-type".to_string(),
        tau3: 0.25,
        pairwise: [0.25; 3],
        ones: Some([0.75; 3]),
    }
}

fn cpt_pair_spectrum() -> Vec<f64> {
    let s = std::f64::consts::SQRT_2;
    vec![(3.0 + 2.0 * s) / 16.0, (3.0 - 2.0 * s) / 16.0, 0.0, 0.0]
}

fn ghz_row_profile() -> ProfileSummary {
    ProfileSummary {
        class: "GHZ-type".to_string(),
        tau3: 1.0,
        pairwise: [0.0; 3],
        ones: None,
    }
}

fn order_claims() -> Vec<Claim> {
    let mut v = vec![
        order_claim(
            "ORDER.PAULI1",
            "The three Pauli matrices generate a group of order 16.",
            &["sigma_x", "sigma_y", "sigma_z"],
            16,
        ),
        order_claim(
            "ORDER.CPT",
            "The parity, charge-conjugation and time-reversal operators generate a group of order 16.",
            &["P", "C", "T_timereversal"],
            16,
        ),
        order_claim(
            "ORDER.DIRAC32",
            "The four gamma matrices generate a group of order 32.",
            &["gamma_0", "gamma_1", "gamma_2", "gamma_3"],
            32,
        ),
        order_claim(
            "ORDER.DIRAC64",
            "The four gamma matrices together with gamma_5 generate a group of order 64.",
            &["gamma_0", "gamma_1", "gamma_2", "gamma_3", "gamma_5"],
            64,
        ),
        order_claim(
            "ORDER.RS",
            "The Mermin matrices R and S generate a group of order 96.",
            &["R", "S"],
            96,
        ),
        order_claim(
            "ORDER.IJ",
            "The quaternionic generators i3 and j3 generate a group of order 8.",
            &["i3", "j3"],
            8,
        ),
        order_claim(
            "ORDER.IJK",
            "The generators i3, j3 and K3 generate a group of order 16.",
            &["i3", "j3", "K3"],
            16,
        ),
        order_claim(
            "ORDER.XY",
            "The generators x and y generate a group of order 120.",
            &["x", "y"],
            120,
        ),
        order_claim(
            "ORDER.XYK",
            "Adjoining K3 to x and y generates a group of order 2,903,040.",
            &["x", "y", "K3"],
            2_903_040,
        ),
        order_claim(
            "ORDER.C3PLUS",
            "Adjoining the controlled-Z gate on the last two qubits to x and y generates \
             the real Clifford group, of order 2,580,480.",
            &["x", "y", "1⊗CZ"],
            2_580_480,
        ),
        order_claim(
            "G3.ORDER.WE8",
            "Adjoining the Toffoli gate to x and y generates the full E8 reflection group, \
             of order 696,729,600.",
            &["x", "y", "TOF"],
            FULL_REFLECTION_ORDER,
        ),
        order_claim(
            "ORDER.IJK.TOF",
            "Adjoining the Toffoli gate to i3, j3 and K3 generates the full E8 reflection group.",
            &["i3", "j3", "K3", "TOF"],
            FULL_REFLECTION_ORDER,
        ),
        order_claim(
            "ORDER.IJK.FRED",
            "Adjoining the Fredkin gate to i3, j3 and K3 also generates the full E8 reflection group.",
            &["i3", "j3", "K3", "Fredkin"],
            FULL_REFLECTION_ORDER,
        ),
        order_claim(
            "ORDER.WZ",
            "The generators W and Z generate a group of order 8.",
            &["W", "Z"],
            8,
        ),
        order_claim(
            "ORDER.WZC",
            "The generators W, Z and c generate a group of order 16.",
            &["W", "Z", "c"],
            16,
        ),
        order_claim(
            "ORDER.WZZP",
            "The generators W, Z and Zprime generate a group of order 16.",
            &["W", "Z", "Zprime"],
            16,
        ),
        order_claim(
            "ORDER.WZCZP",
            "The generators W, Z, c and Zprime generate a group of order 32.",
            &["W", "Z", "c", "Zprime"],
            32,
        ),
        order_claim(
            "ORDER.P2REP",
            "The generators g1, g2, c1, c2 and u generate a group of order 64.",
            &["g1", "g2", "c1", "c2", "u"],
            64,
        ),
        order_claim(
            "ORDER.G1G2",
            "The generators g1 and g2 generate a group of order 4.",
            &["g1", "g2"],
            4,
        ),
        order_claim(
            "ORDER.C1C2",
            "The generators c1 and c2 generate a group of order 8.",
            &["c1", "c2"],
            8,
        ),
    ];
    v.push(claim(
        "ORDER.XYJ",
        "Adjoining j3 to x and y generates a group of order 51,840; the order is implied \
         rather than printed, so a mismatch is reported, not failed.",
        Severity::Informational,
        ClaimValue::Count(51_840),
        |ctx| Ok(ClaimValue::Count(ctx.order_u64(&["x", "y", "j3"])?)),
    ));
    v.push(claim(
        "ORDER.XYI",
        "The order of the group generated by x, y and i3 is reported; the recorded \
         statement is ambiguous about its value.",
        Severity::Informational,
        ClaimValue::Nothing,
        |ctx| Ok(ClaimValue::Count(ctx.order_u64(&["x", "y", "i3"])?)),
    ));
    v.push(claim(
        "ORDER.PAULI2",
        "The one-sided Pauli tensors generate the two-qubit Pauli group, of order 64.",
        Severity::Assert,
        ClaimValue::Count(64),
        |ctx| {
            let gens = two_qubit_pauli_generators()?;
            let order = ctx.order_of(4, &gens)?;
            order
                .to_u64()
                .map(ClaimValue::Count)
                .ok_or_else(|| "order exceeds the u64 claim range".to_string())
        },
    ));
    v.push(claim(
        "ORDER.TRIPLE1",
        "The first commuting observable triple generates a group of order 8.",
        Severity::Assert,
        ClaimValue::Count(8),
        |ctx| {
            let gens = first_triple()?;
            Ok(ClaimValue::Count(
                ctx.order_of(4, &gens)?.to_u64().expect("small order"),
            ))
        },
    ));
    v.push(claim(
        "ORDER.TRIPLE2",
        "The second commuting observable triple generates a group of order 4.",
        Severity::Assert,
        ClaimValue::Count(4),
        |ctx| {
            let gens = second_triple()?;
            Ok(ClaimValue::Count(
                ctx.order_of(4, &gens)?.to_u64().expect("small order"),
            ))
        },
    ));
    v.push(claim(
        "ORDER.SIX",
        "The six observables of the two triples generate a group of order 16.",
        Severity::Assert,
        ClaimValue::Count(16),
        |ctx| {
            let gens = six_observables()?;
            Ok(ClaimValue::Count(
                ctx.order_of(4, &gens)?.to_u64().expect("small order"),
            ))
        },
    ));
    v
}

fn identification_claims() -> Vec<Claim> {
    let mut v = vec![
        label_claim(
            "ID.PAULI1",
            "The single-qubit Pauli group identifies as [16,13].",
            &["sigma_x", "sigma_y", "sigma_z"],
            "[16,13]",
        ),
        label_claim(
            "ID.CPT",
            "The group generated by P, C and T identifies as [16,13].",
            &["P", "C", "T_timereversal"],
            "[16,13]",
        ),
        label_claim(
            "ID.IJK",
            "The group generated by i3, j3 and K3 identifies as [16,13].",
            &["i3", "j3", "K3"],
            "[16,13]",
        ),
        label_claim(
            "ID.WZC",
            "The group generated by W, Z and c identifies as [16,13].",
            &["W", "Z", "c"],
            "[16,13]",
        ),
        label_claim(
            "ID.G1C1C2",
            "The group generated by g1, c1 and c2 identifies as [16,13].",
            &["g1", "c1", "c2"],
            "[16,13]",
        ),
        label_claim(
            "ID.WZZP",
            "The group generated by W, Z and Zprime identifies as [16,12].",
            &["W", "Z", "Zprime"],
            "[16,12]",
        ),
        label_claim(
            "ID.G2C1C2",
            "The group generated by g2, c1 and c2 identifies as [16,12].",
            &["g2", "c1", "c2"],
            "[16,12]",
        ),
        label_claim(
            "ID.G1G2C1",
            "The group generated by g1, g2 and c1 identifies as [16,11].",
            &["g1", "g2", "c1"],
            "[16,11]",
        ),
        label_claim(
            "ID.G1G2C2",
            "The group generated by g1, g2 and c2 identifies as [16,11].",
            &["g1", "g2", "c2"],
            "[16,11]",
        ),
        label_claim(
            "ID.DIRAC32",
            "The group generated by the four gamma matrices identifies as [32,50].",
            &["gamma_0", "gamma_1", "gamma_2", "gamma_3"],
            "[32,50]",
        ),
        label_claim(
            "ID.WZCZP",
            "The group generated by W, Z, c and Zprime identifies as [32,50].",
            &["W", "Z", "c", "Zprime"],
            "[32,50]",
        ),
        label_claim(
            "ID.XY",
            "The group generated by x and y identifies as SL(2,5).",
            &["x", "y"],
            "SL(2,5)",
        ),
        label_claim(
            "ID.DIRAC64",
            "The gamma matrices together with gamma_5 identify as [64,66].",
            &["gamma_0", "gamma_1", "gamma_2", "gamma_3", "gamma_5"],
            "[64,66]",
        ),
        label_claim(
            "ID.P2REP",
            "The group generated by g1, g2, c1, c2 and u identifies as [64,66].",
            &["g1", "g2", "c1", "c2", "u"],
            "[64,66]",
        ),
        label_claim(
            "ID.IJ",
            "The group generated by i3 and j3 identifies as the quaternion group Q8.",
            &["i3", "j3"],
            "Q8",
        ),
        label_claim(
            "ID.WZ",
            "The group generated by W and Z identifies as the quaternion group Q8.",
            &["W", "Z"],
            "Q8",
        ),
        label_claim(
            "ID.C1C2",
            "The group generated by c1 and c2 identifies as the quaternion group Q8.",
            &["c1", "c2"],
            "Q8",
        ),
        label_claim(
            "ID.G1G2",
            "The group generated by g1 and g2 identifies as the Klein four-group.",
            &["g1", "g2"],
            "Z2^2",
        ),
        label_claim(
            "ID.KI",
            "The group generated by K3 and i3 identifies as the dihedral group D4.",
            &["K3", "i3"],
            "D4",
        ),
    ];
    v.push(claim(
        "ID.TRIVIAL",
        "The empty generator set yields the one-element group.",
        Severity::Assert,
        ClaimValue::Count(1),
        |_| {
            let set = enumerate_gens(8, Vec::new(), 4)?;
            let label = label_of(&set)?;
            if label != "trivial" {
                return Err(format!("one-element group identified as {label}"));
            }
            Ok(ClaimValue::Count(set.order() as u64))
        },
    ));
    v.push(claim(
        "ID.PAULI2",
        "The two-qubit Pauli group identifies as [64,66].",
        Severity::Assert,
        ClaimValue::Text("[64,66]".to_string()),
        |_| {
            let set = enumerate_gens(4, two_qubit_pauli_generators()?, SMALL_CAP)?;
            Ok(ClaimValue::Text(label_of(&set)?))
        },
    ));
    v.push(claim(
        "ID.TRIPLE1",
        "The first observable triple generates an elementary abelian group of order 8.",
        Severity::Assert,
        ClaimValue::Text("Z2^3".to_string()),
        |_| {
            let set = enumerate_gens(4, first_triple()?, SMALL_CAP)?;
            Ok(ClaimValue::Text(label_of(&set)?))
        },
    ));
    v.push(claim(
        "ID.TRIPLE2",
        "The second observable triple generates the Klein four-group.",
        Severity::Assert,
        ClaimValue::Text("Z2^2".to_string()),
        |_| {
            let set = enumerate_gens(4, second_triple()?, SMALL_CAP)?;
            Ok(ClaimValue::Text(label_of(&set)?))
        },
    ));
    v.push(claim(
        "ID.SIX",
        "The six observables generate a group identifying as [16,11].",
        Severity::Assert,
        ClaimValue::Text("[16,11]".to_string()),
        |_| {
            let set = enumerate_gens(4, six_observables()?, SMALL_CAP)?;
            Ok(ClaimValue::Text(label_of(&set)?))
        },
    ));
    v
}

fn fingerprint_claims() -> Vec<Claim> {
    vec![
        claim(
            "FP.CROSS.CPT16",
            "The five order-16 realizations (Pauli matrices; P, C, T; i3, j3, K3; W, Z, c; \
             g1, c1, c2) share one fingerprint.",
            Severity::Assert,
            ClaimValue::Flag(true),
            |_| {
                let families: [&[&str]; 5] = [
                    &["sigma_x", "sigma_y", "sigma_z"],
                    &["P", "C", "T_timereversal"],
                    &["i3", "j3", "K3"],
                    &["W", "Z", "c"],
                    &["g1", "c1", "c2"],
                ];
                let prints = families
                    .iter()
                    .map(|names| fingerprint_names(names))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ClaimValue::Flag(prints.iter().all(|p| *p == prints[0])))
            },
        ),
        claim(
            "FP.CROSS.E32",
            "The three order-32 realizations (gamma matrices; W, Z, c, Zprime; g2, c1, c2, u) \
             share one fingerprint.",
            Severity::Assert,
            ClaimValue::Flag(true),
            |_| {
                let families: [&[&str]; 3] = [
                    &["gamma_0", "gamma_1", "gamma_2", "gamma_3"],
                    &["W", "Z", "c", "Zprime"],
                    &["g2", "c1", "c2", "u"],
                ];
                let prints = families
                    .iter()
                    .map(|names| fingerprint_names(names))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ClaimValue::Flag(prints.iter().all(|p| *p == prints[0])))
            },
        ),
    ]
}

fn structure_claims() -> Vec<Claim> {
    let mut v = vec![
        normality_claim(
            "STRUCT.SERIES.QP",
            "The quaternion group generated by c1 and c2 is normal in the group generated \
             by g1, c1 and c2.",
            &["c1", "c2"],
            &["g1", "c1", "c2"],
        ),
        normality_claim(
            "STRUCT.SERIES.PE32",
            "The group generated by g1, c1 and c2 is normal in the order-32 group obtained \
             by adjoining u.",
            &["g1", "c1", "c2"],
            &["g1", "c1", "c2", "u"],
        ),
        normality_claim(
            "STRUCT.SERIES.E32P2",
            "The order-32 group generated by g1, c1, c2 and u is normal in the order-64 group.",
            &["g1", "c1", "c2", "u"],
            &["g1", "g2", "c1", "c2", "u"],
        ),
        normality_claim(
            "STRUCT.SERIES.PP2",
            "The group generated by g1, c1 and c2 is normal in the order-64 group.",
            &["g1", "c1", "c2"],
            &["g1", "g2", "c1", "c2", "u"],
        ),
        normality_claim(
            "STRUCT.NOG1.NORMAL",
            "The order-32 group generated by g2, c1, c2 and u is normal in the order-64 group.",
            &["g2", "c1", "c2", "u"],
            &["g1", "g2", "c1", "c2", "u"],
        ),
        label_claim(
            "STRUCT.NOG1.LABEL",
            "Removing g1 from the order-64 generating set leaves a group identifying as [32,50].",
            &["g2", "c1", "c2", "u"],
            "[32,50]",
        ),
        label_claim(
            "STRUCT.NOG2.LABEL",
            "Removing g2 from the order-64 generating set leaves a group identifying as E32+.",
            &["g1", "c1", "c2", "u"],
            "E32+",
        ),
        label_claim(
            "STRUCT.NOC1.LABEL",
            "Removing c1 from the order-64 generating set leaves a group identifying as E32+.",
            &["g1", "g2", "c2", "u"],
            "E32+",
        ),
        label_claim(
            "STRUCT.NOC2.LABEL",
            "Removing c2 from the order-64 generating set leaves a group identifying as E32+.",
            &["g1", "g2", "c1", "u"],
            "E32+",
        ),
    ];
    v.push(claim(
        "STRUCT.NOU.LABEL",
        "Removing u from the order-64 generating set is recorded as leaving E32+; the \
         computed group is a different order-32 group, so a mismatch is reported.",
        Severity::Informational,
        ClaimValue::Text("E32+".to_string()),
        |_| {
            let set = enumerate_names(&["g1", "g2", "c1", "c2"], SMALL_CAP)?;
            Ok(ClaimValue::Text(label_of(&set)?))
        },
    ));
    v.push(claim(
        "STRUCT.G1.IN.NOG1",
        "The recorded normal series would require g1 to lie in the group generated by \
         g2, c1, c2 and u; the membership verdict is reported.",
        Severity::Informational,
        ClaimValue::Flag(true),
        |_| {
            let sup = catalogue_group(&["g2", "c1", "c2", "u"])?;
            let g1 = catalogue::build("g1").map_err(|e| e.to_string())?;
            Ok(ClaimValue::Flag(
                sup.contains(&g1).map_err(|e| e.to_string())?,
            ))
        },
    ));
    v
}

fn matrix_identity_claims() -> Vec<Claim> {
    vec![
        claim(
            "MATID.RS.HI",
            "The product R times S equals the Hadamard matrix tensored with the identity, exactly.",
            Severity::Assert,
            ClaimValue::Flag(true),
            |_| {
                let r = catalogue::build("R").map_err(|e| e.to_string())?;
                let s = catalogue::build("S").map_err(|e| e.to_string())?;
                let h = catalogue::build("H").map_err(|e| e.to_string())?;
                let rs = r.mul(&s).map_err(|e| e.to_string())?;
                let hi = h.tensor(&ExactMatrix::identity(2));
                Ok(ClaimValue::Flag(rs.entries() == hi.entries()))
            },
        ),
        claim(
            "MATID.SIGNS.R",
            "The rows of R are joint eigenstates of the first observable triple with the \
             recorded sign table.",
            Severity::Assert,
            ClaimValue::Flag(true),
            |_| {
                let r = catalogue::build("R").map_err(|e| e.to_string())?;
                let signs = vec![
                    vec![1, 1, -1],
                    vec![-1, -1, -1],
                    vec![-1, 1, 1],
                    vec![1, -1, 1],
                ];
                let ok = verify_joint_eigenstates(&first_triple()?, &r, &signs)
                    .map_err(|e| e.to_string())?;
                Ok(ClaimValue::Flag(ok))
            },
        ),
        claim(
            "MATID.SIGNS.S",
            "The rows of S are joint eigenstates of the second observable triple with the \
             recorded sign table.",
            Severity::Assert,
            ClaimValue::Flag(true),
            |_| {
                let s = catalogue::build("S").map_err(|e| e.to_string())?;
                let signs = vec![
                    vec![1, -1, -1],
                    vec![-1, 1, -1],
                    vec![-1, -1, 1],
                    vec![1, 1, 1],
                ];
                let ok = verify_joint_eigenstates(&second_triple()?, &s, &signs)
                    .map_err(|e| e.to_string())?;
                Ok(ClaimValue::Flag(ok))
            },
        ),
        claim(
            "MATID.UNITARY.ALL",
            "Every catalogue matrix is exactly unitary and matches its frozen checksum.",
            Severity::Assert,
            ClaimValue::Flag(true),
            |_| {
                for name in catalogue::NAMES {
                    catalogue::build(name).map_err(|e| e.to_string())?;
                }
                Ok(ClaimValue::Flag(true))
            },
        ),
    ]
}

fn tangle_claims() -> Vec<Claim> {
    let mut v = vec![
        claim(
            "TANGLE.CPT.TAU3",
            "The state read from the first row of K3 has three-tangle 1/4.",
            Severity::Assert,
            ClaimValue::Real(0.25),
            |_| {
                let k3 = catalogue::build("K3").map_err(|e| e.to_string())?;
                let state = state_from_row(&k3, 0).map_err(|e| e.to_string())?;
                Ok(ClaimValue::Real(three_tangle(&state).tau3))
            },
        ),
        claim(
            "TANGLE.CPT.LINENT",
            "The state read from the first row of K3 has linear entropy 3/4 at pivot A.",
            Severity::Assert,
            ClaimValue::Real(0.75),
            |_| {
                let k3 = catalogue::build("K3").map_err(|e| e.to_string())?;
                let state = state_from_row(&k3, 0).map_err(|e| e.to_string())?;
                Ok(ClaimValue::Real(one_tangle(&state, Qubit::A)))
            },
        ),
        profile_claim(
            "TANGLE.K.ROWS",
            "Every row of K3 has three-tangle 1/4, pairwise tangles 1/4 and one-tangles 3/4.",
            "K3",
            Severity::Assert,
            cpt_row_profile(),
        ),
        profile_claim(
            "TANGLE.I.ROWS",
            "Every row of i3 has three-tangle 1/4, pairwise tangles 1/4 and one-tangles 3/4.",
            "i3",
            Severity::Assert,
            cpt_row_profile(),
        ),
        profile_claim(
            "TANGLE.J.ROWS",
            "Every row of j3 has three-tangle 1/4, pairwise tangles 1/4 and one-tangles 3/4.",
            "j3",
            Severity::Assert,
            cpt_row_profile(),
        ),
        profile_claim(
            "TANGLE.C.ROWS",
            "The rows of c are expected to share the order-16 family profile; this is \
             implied rather than stated, so it is reported.",
            "c",
            Severity::Informational,
            cpt_row_profile(),
        ),
        spectrum_claim(
            "TANGLE.K.SPECTRUM",
            "Every pair reduction of every row of K3 has concurrence spectrum \
             {(3+2*sqrt(2))/16, (3-2*sqrt(2))/16, 0, 0}.",
            "K3",
            cpt_pair_spectrum(),
        ),
        spectrum_claim(
            "TANGLE.I.SPECTRUM",
            "Every pair reduction of every row of i3 has the same concurrence spectrum as K3.",
            "i3",
            cpt_pair_spectrum(),
        ),
        spectrum_claim(
            "TANGLE.J.SPECTRUM",
            "Every pair reduction of every row of j3 has the same concurrence spectrum as K3.",
            "j3",
            cpt_pair_spectrum(),
        ),
        profile_claim(
            "TANGLE.X.ROWS",
            "Every row of x is GHZ-type with three-tangle 1 and vanishing pairwise tangles.",
            "x",
            Severity::Assert,
            ghz_row_profile(),
        ),
        profile_claim(
            "TANGLE.Y.ROWS",
            "Every row of y is GHZ-type with three-tangle 1 and vanishing pairwise tangles.",
            "y",
            Severity::Assert,
            ghz_row_profile(),
        ),
        spectrum_claim(
            "TANGLE.X.SPECTRUM",
            "Every pair reduction of every row of x has concurrence spectrum {1/4, 1/4, 0, 0}.",
            "x",
            vec![0.25, 0.25, 0.0, 0.0],
        ),
        spectrum_claim(
            "TANGLE.Y.SPECTRUM",
            "Every pair reduction of every row of y has concurrence spectrum {1/4, 1/4, 0, 0}.",
            "y",
            vec![0.25, 0.25, 0.0, 0.0],
        ),
        profile_claim(
            "TANGLE.W.ROWS",
            "Every row of W is W-type with three-tangle 0 and subsystem concurrences 1/2 \
             (pairwise tangles 1/4).",
            "W",
            Severity::Assert,
            ProfileSummary {
                class: "W-type".to_string(),
                tau3: 0.0,
                pairwise: [0.25; 3],
                ones: None,
            },
        ),
        profile_claim(
            "TANGLE.Z.ROWS",
            "Every row of Z is chain-type B-A-C with three-tangle 1/4 and vanishing BC tangle.",
            "Z",
            Severity::Assert,
            ProfileSummary {
                class: "chain-BAC".to_string(),
                tau3: 0.25,
                pairwise: [0.25, 0.25, 0.0],
                ones: None,
            },
        ),
        row_class_claim(
            "TANGLE.ZP.ROWS",
            "The rows of Zprime encode chain-type A-B-C states; the class is recorded \
             without tangles, so the classification is reported.",
            "Zprime",
            Severity::Informational,
            "chain-ABC",
        ),
        row_class_claim(
            "TANGLE.G1.ROWS",
            "The rows of g1 are GHZ-type states.",
            "g1",
            Severity::Assert,
            "GHZ-type",
        ),
        row_class_claim(
            "TANGLE.G2.ROWS",
            "The rows of g2 are GHZ-type states.",
            "g2",
            Severity::Assert,
            "GHZ-type",
        ),
        row_class_claim(
            "TANGLE.C1.ROWS",
            "The rows of c1 are chain-type B-A-C states.",
            "c1",
            Severity::Assert,
            "chain-BAC",
        ),
        row_class_claim(
            "TANGLE.C2.ROWS",
            "The rows of c2 are chain-type B-A-C states.",
            "c2",
            Severity::Assert,
            "chain-BAC",
        ),
        row_class_claim(
            "TANGLE.U.ROWS",
            "The rows of u are separable states.",
            "u",
            Severity::Assert,
            "separable",
        ),
        claim(
            "TANGLE.GHZ",
            "The canonical GHZ state has three-tangle 1.",
            Severity::Assert,
            ClaimValue::Real(1.0),
            |_| Ok(ClaimValue::Real(three_tangle(&PureState3::ghz()).tau3)),
        ),
        claim(
            "TANGLE.WSTATE",
            "The canonical W state has three-tangle 0.",
            Severity::Assert,
            ClaimValue::Real(0.0),
            |_| Ok(ClaimValue::Real(three_tangle(&PureState3::w_state()).tau3)),
        ),
    ];
    v.push(claim(
        "TANGLE.W.LINENT",
        "The rows of W are recorded with linear entropy 1; the residual-tangle identity \
         forces 1/2 given the other recorded values, so the mismatch is reported.",
        Severity::Informational,
        ClaimValue::Real(1.0),
        |_| {
            let w = catalogue::build("W").map_err(|e| e.to_string())?;
            let state = state_from_row(&w, 0).map_err(|e| e.to_string())?;
            Ok(ClaimValue::Real(one_tangle(&state, Qubit::A)))
        },
    ));
    v
}

fn kernel_claim() -> Claim {
    claim(
        "KERNEL.MINIMAL",
        "Adjoining the Toffoli gate to any proper subgroup of the 16-element group \
         generated by i3, j3 and K3 stays strictly below order 696,729,600, while the \
         full group reaches it.",
        Severity::Informational,
        ClaimValue::Flag(true),
        |ctx| {
            let base = enumerate_names(&["i3", "j3", "K3"], 64)?;
            let subgroups = all_subgroups(&base).map_err(|e| e.to_string())?;
            let tof = catalogue::build("TOF").map_err(|e| e.to_string())?;
            let full = ctx
                .order(&["i3", "j3", "K3", "TOF"])?
                .to_u64()
                .ok_or("full inflation order exceeds u64")?;
            if full != FULL_REFLECTION_ORDER {
                return Ok(ClaimValue::Flag(false));
            }
            for subgroup in &subgroups {
                if subgroup.len() == base.order() {
                    continue;
                }
                let mut gens: Vec<ExactMatrix> = subgroup
                    .iter()
                    .map(|&i| base.element(i as usize).clone())
                    .collect();
                gens.push(tof.clone());
                let inflated = ctx.order_of(8, &gens)?;
                if inflated.to_u64().is_none_or(|o| o >= FULL_REFLECTION_ORDER) {
                    return Ok(ClaimValue::Flag(false));
                }
            }
            Ok(ClaimValue::Flag(true))
        },
    )
}

/// Every built-in claim, grouped by family. Results are reported in id
/// order, so construction order here is cosmetic.
pub fn builtin_claims() -> Vec<Claim> {
    let mut claims = order_claims();
    claims.extend(identification_claims());
    claims.extend(fingerprint_claims());
    claims.extend(structure_claims());
    claims.extend(matrix_identity_claims());
    claims.extend(tangle_claims());
    claims.push(kernel_claim());
    claims
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claims::runner;
    use std::collections::HashSet;

    #[test]
    fn claim_ids_are_unique_and_nonempty() {
        let claims = builtin_claims();
        assert!(claims.len() >= 80);
        let mut seen = HashSet::new();
        for c in &claims {
            assert!(!c.id.is_empty());
            assert!(!c.description.is_empty());
            assert!(seen.insert(c.id), "duplicate id {}", c.id);
        }
    }

    #[test]
    fn the_registry_contains_the_frozen_anchor_claims() {
        let claims = builtin_claims();
        let get = |id: &str| claims.iter().find(|c| c.id == id).unwrap();
        assert_eq!(
            get("G3.ORDER.WE8").expected,
            ClaimValue::Count(696_729_600)
        );
        assert_eq!(get("TANGLE.CPT.TAU3").expected, ClaimValue::Real(0.25));
        assert_eq!(get("ID.TRIVIAL").expected, ClaimValue::Count(1));
    }

    #[test]
    fn informational_severity_marks_exactly_the_open_statements() {
        let claims = builtin_claims();
        let informational: HashSet<&str> = claims
            .iter()
            .filter(|c| c.severity == Severity::Informational)
            .map(|c| c.id)
            .collect();
        let expected: HashSet<&str> = [
            "ORDER.XYI",
            "ORDER.XYJ",
            "STRUCT.G1.IN.NOG1",
            "STRUCT.NOU.LABEL",
            "TANGLE.C.ROWS",
            "TANGLE.W.LINENT",
            "TANGLE.ZP.ROWS",
            "KERNEL.MINIMAL",
        ]
        .into_iter()
        .collect();
        assert_eq!(informational, expected);
    }

    #[test]
    fn cheap_anchor_claims_pass_end_to_end() {
        let dir = tempfile::tempdir().unwrap();
        let claims = builtin_claims();
        let report = runner::run(
            &claims,
            Some("TANGLE.GHZ"),
            Some(1),
            dir.path().to_path_buf(),
        );
        assert_eq!(report.totals.pass, 1);
        let report = runner::run(
            &claims,
            Some("ID.TRIVIAL"),
            Some(1),
            dir.path().to_path_buf(),
        );
        assert_eq!(report.totals.pass, 1);
        let report = runner::run(
            &claims,
            Some("MATID.*"),
            Some(1),
            dir.path().to_path_buf(),
        );
        assert_eq!(report.totals.pass, 4);
        assert_eq!(report.totals.fail, 0);
    }

    #[test]
    fn the_w_row_linear_entropy_claim_reports_a_discrepancy() {
        let dir = tempfile::tempdir().unwrap();
        let claims = builtin_claims();
        let report = runner::run(
            &claims,
            Some("TANGLE.W.*"),
            Some(1),
            dir.path().to_path_buf(),
        );
        let linent = report
            .results
            .iter()
            .find(|r| r.id == "TANGLE.W.LINENT")
            .unwrap();
        assert_eq!(linent.status, crate::claims::Status::DiscrepancyReported);
        assert_eq!(linent.computed, Some(ClaimValue::Real(0.5)));
        let rows = report
            .results
            .iter()
            .find(|r| r.id == "TANGLE.W.ROWS")
            .unwrap();
        assert_eq!(rows.status, crate::claims::Status::Pass);
        assert!(report.exit_ok());
    }
}
