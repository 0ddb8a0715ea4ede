//! Build a catalog class, pull it back along a gluing map, pair it with a
//! test curve and evaluate a counting formula.

use mbar::catalog::{build, ClassParams};
use mbar::enumerative::de_jonquieres_unlabelled;
use mbar::io::to_unicode;
use mbar::maps::{parse_map_kind, pullback, GluingMap};
use mbar::{builtin_test_curve, pair};

fn main() -> mbar::Result<()> {
    let residual = build("residual", &ClassParams { g: 4, ..Default::default() })?;
    println!("R(4) = {}", to_unicode(&residual));

    let tail = GluingMap::into_codomain(parse_map_kind("glue-tail:h=1,j=0,at=1")?, residual.base())?;
    println!("pulled back to {}: {}", tail.domain(), to_unicode(&pullback(&tail, &residual)?));

    let a = builtin_test_curve("A", residual.base(), &[])?;
    println!("A · R(4) = {}", pair(&a, &residual)?);

    println!("dJ[4; 1,2,2] = {}", de_jonquieres_unlabelled(4, &[1, 2, 2])?);
    Ok(())
}
