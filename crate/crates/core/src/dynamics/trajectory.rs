use std::io::{self, Write};

use crate::function_zoo::Point4;

use super::schedule::StepSchedule;

/// A recorded run of the discrete subgradient iteration.
///
/// `points` holds `X_1 ..= X_{N+1}` for an `N`-step schedule; `selections`
/// holds the selection at every point (including the final one), `steps`
/// the `N` steps actually taken. `radii` are the two plane norms
/// `(||(x,y)||, ||(z,w)||)` and `dists` the distance to the critical set,
/// both recorded at every point. Fields are public: the record is plain
/// data, and the certification checks re-derive everything from `points`
/// anyway (so hand-edited records are caught).
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub points: Vec<Point4>,
    pub selections: Vec<Point4>,
    pub radii: Vec<[f64; 2]>,
    pub dists: Vec<f64>,
    pub steps: Vec<f64>,
    pub schedule: StepSchedule,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// 17-significant-digit rendering used by every float column.
    pub fn render_f64(v: f64) -> String {
        format!("{v:.16e}")
    }

    /// Writes the trajectory as CSV with the fixed column contract
    /// `n,x,y,z,w,r1,r2,dist_crit,t_n,gnorm1,gnorm2`; `t_n` on the final
    /// row is 0 (no step leaves the terminal point). `stride > 1` keeps
    /// every stride-th row (the first and last rows always appear).
    pub fn write_csv<W: Write>(&self, out: &mut W, stride: usize) -> io::Result<()> {
        let stride = stride.max(1);
        writeln!(out, "n,x,y,z,w,r1,r2,dist_crit,t_n,gnorm1,gnorm2")?;
        let last = self.points.len() - 1;
        for (i, p) in self.points.iter().enumerate() {
            if i % stride != 0 && i != last {
                continue;
            }
            let (g1, g2) = self.selections[i].split();
            let t_n = if i < self.steps.len() { self.steps[i] } else { 0.0 };
            let cols = [
                p.x,
                p.y,
                p.z,
                p.w,
                self.radii[i][0],
                self.radii[i][1],
                self.dists[i],
                t_n,
                g1.norm(),
                g2.norm(),
            ];
            write!(out, "{}", i + 1)?;
            for c in cols {
                write!(out, ",{}", Self::render_f64(c))?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}
