use kinkforge::*;

fn main() -> Result<(), Error> {
    let inner = case_by_id("phi8.4dm.inner")?;
    let outer = case_by_id("phi8.4dm.outer")?;
    let (ia, ib) = inner.minima();
    let (oa, ob) = outer.minima();
    println!("inner minima ({ia}, {ib}), outer ({oa}, {ob})");
    let e_inner = quadrature_energy(&inner, ia, ib)?;
    let e_outer = quadrature_energy(&inner, oa, ob)?;
    let e_left = quadrature_energy(&inner, -ob, -oa)?;
    let whole = quadrature_energy(&inner, -ob, ob)?;
    let sum = e_inner.value + e_outer.value + e_left.value;
    println!(
        "pieces {:.17e} + {:.17e} + {:.17e} = {:.17e}",
        e_left.value, e_inner.value, e_outer.value, sum
    );
    println!(
        "whole  {:.17e}  diff rel {:.3e}  reported rel err {:.3e} (evals {})",
        whole.value,
        (whole.value - sum).abs() / sum,
        whole.abs_error / whole.value,
        whole.evaluations
    );

    // phi4 reference value
    let p = PolynomialPotential::new(1.0, vec![1.0, 0.0, -2.0, 0.0, 1.0])?;
    let e = quadrature_energy(&p, -1.0, 1.0)?;
    let want = 4.0 * 2f64.sqrt() / 3.0;
    println!("phi4: {:.17e} vs {want:.17e} rel {:.3e}", e.value, (e.value - want).abs() / want);
    Ok(())
}
