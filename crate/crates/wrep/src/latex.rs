use wrep_core::reps::MatrixRep;
use wrep_core::ring::{latex, MatrixLP};
use wrep_core::welded::WeldedGen;

/// `\begin{pmatrix}0 & t\\1 & 1-t\end{pmatrix}`.
pub fn matrix_latex(m: &MatrixLP) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| m.row(r).iter().map(latex).collect::<Vec<_>>().join(" & "))
        .collect();
    format!("\\begin{{pmatrix}}{}\\end{{pmatrix}}", rows.join("\\\\"))
}

pub fn gen_latex(g: WeldedGen) -> String {
    match g {
        WeldedGen::Sigma(i) => format!("\\sigma_{{{i}}}"),
        WeldedGen::SigmaInv(i) => format!("\\sigma_{{{i}}}^{{-1}}"),
        WeldedGen::Tau(i) => format!("\\tau_{{{i}}}"),
    }
}

/// One `g \mapsto M` line per generator.
pub fn rep_latex(rep: &MatrixRep) -> String {
    let mut out = String::new();
    for g in WeldedGen::generators(rep.n()) {
        let m = rep.image(g).expect("generator of the right group");
        out.push_str(&format!("{} \\mapsto {}\n", gen_latex(g), matrix_latex(m)));
    }
    out
}
