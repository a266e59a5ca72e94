use crate::error::Result;
use crate::wythoff::PolyhedronPatch;

pub fn patch_to_json(patch: &PolyhedronPatch) -> Result<String> {
    Ok(serde_json::to_string_pretty(patch)?)
}

pub fn patch_from_json(text: &str) -> Result<PolyhedronPatch> {
    Ok(serde_json::from_str(text)?)
}
