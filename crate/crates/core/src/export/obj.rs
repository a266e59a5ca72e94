use std::collections::HashMap;
use std::io::Write;

use crate::error::{Error, Result};
use crate::geometry::Vec3;
use crate::wythoff::PolyhedronPatch;

pub const DECIMAL_DIGITS: usize = 12;

struct VertexTable {
    index: HashMap<Vec3, usize>,
    lines: Vec<Vec3>,
}

impl VertexTable {
    fn id(&mut self, p: &Vec3) -> usize {
        if let Some(&i) = self.index.get(p) {
            return i;
        }
        self.lines.push(p.clone());
        self.index.insert(p.clone(), self.lines.len());
        self.lines.len()
    }
}

/// Writes the patch as an OBJ mesh. Patch vertex positions come first in
/// patch order; points of helical faces outside the patch follow in order
/// of first use. Each face becomes an `l` polyline over `turns` periods;
/// finite faces are closed and also get an `f` record.
pub fn write_obj(patch: &PolyhedronPatch, turns: usize, out: &mut impl Write) -> Result<()> {
    if turns == 0 {
        return Err(Error::Parse("turns must be at least 1".into()));
    }
    let mut table = VertexTable {
        index: HashMap::new(),
        lines: Vec::new(),
    };
    for v in &patch.vertices {
        table.id(&v.pos);
    }
    let mut records = Vec::new();
    for face in &patch.faces {
        if face.is_finite() {
            let ids: Vec<usize> = face.strip.iter().map(|p| table.id(p)).collect();
            let mut closed = ids.clone();
            closed.push(ids[0]);
            records.push(format!("l {}", join(&closed)));
            records.push(format!("f {}", join(&ids)));
        } else {
            let ids: Vec<usize> = face.expand(turns).iter().map(|p| table.id(p)).collect();
            records.push(format!("l {}", join(&ids)));
        }
    }
    writeln!(
        out,
        "# {} ({},{}) radius {}",
        patch.family, patch.params.0, patch.params.1, patch.radius
    )?;
    for p in &table.lines {
        let [x, y, z] = &p.0;
        writeln!(
            out,
            "v {} {} {}",
            x.to_decimal(DECIMAL_DIGITS),
            y.to_decimal(DECIMAL_DIGITS),
            z.to_decimal(DECIMAL_DIGITS)
        )?;
    }
    for r in records {
        writeln!(out, "{r}")?;
    }
    Ok(())
}

fn join(ids: &[usize]) -> String {
    ids.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}
