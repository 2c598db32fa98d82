//! Table rendering for Betti diagrams and strand reports.

use edge_ideals::betti::BettiDiagram;
use edge_ideals::strands::{RegularityClass, StrandReport};

/// Classic diagram layout: columns indexed by the homological index `i`,
/// rows by `j - i`, zeros shown as dots.
pub fn diagram_table(d: &BettiDiagram) -> String {
    let reg = match d.regularity() {
        Ok(r) => r,
        Err(_) => return "empty ideal: the graph has no edges\n".to_string(),
    };
    let max_i = d.max_homological_index().unwrap_or(0);
    let width = d
        .iter()
        .map(|(_, v)| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(max_i.to_string().len());
    let mut out = String::new();
    out.push_str("      ");
    for i in 0..=max_i {
        out.push_str(&format!(" {i:>width$}"));
    }
    out.push('\n');
    for row in 2..=reg {
        out.push_str(&format!("  {row:>3}:"));
        for i in 0..=max_i {
            let value = d.entry(i, i + row);
            if value == 0 {
                out.push_str(&format!(" {:>width$}", "."));
            } else {
                out.push_str(&format!(" {value:>width$}"));
            }
        }
        out.push('\n');
    }
    out.push_str(&format!("regularity: {reg}\n"));
    out
}

/// One-line human summary of a strand report.
pub fn strand_summary(r: &StrandReport) -> String {
    match r.class {
        RegularityClass::Linear => "reg=2".to_string(),
        RegularityClass::Reg3 => "reg=3".to_string(),
        RegularityClass::Higher => format!(
            "first nonlinear strand at i={}, degree {}, count {}",
            r.first_nonlinear_i.unwrap(),
            r.strand_degree.unwrap(),
            r.strand_count.unwrap()
        ),
    }
}
