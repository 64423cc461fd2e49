//! Semigroup sources: builtin names or JSON files.

use std::path::Path;

use invco_core::builtin::{builtin, Named, BUILTINS};
use invco_core::semigroup::FiniteInverseSemigroup;
use invco_core::{Error, Result};

pub fn load(source: &str) -> Result<Named> {
    if let Some(named) = builtin(source) {
        return named;
    }
    let path = Path::new(source);
    if !path.exists() {
        return Err(Error::Usage(format!(
            "unknown semigroup {source:?}: not a file and not one of {}",
            BUILTINS.join(", ")
        )));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {source}: {e}")))?;
    Ok(Named::new(
        source,
        FiniteInverseSemigroup::parse_json(&text)?,
    ))
}
