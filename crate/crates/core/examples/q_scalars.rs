//! Laurent polynomials in `q`: exact arithmetic, the involution `q ↦ q⁻¹`,
//! numerical evaluation at `q = e^{2πiθ}` and reduction at roots of unity.

use qdtorus::scalars::{eval_scalar, reduce_cyclotomic, star_scalar, CyclotomicMode, QScalar};

fn main() -> qdtorus::Result<()> {
    let q = QScalar::q_pow(1);
    let x = &(&q + &QScalar::from_ratio(1, 2)) * &(&q - &QScalar::q_pow(-1));
    println!("x = (q + 1/2)(q - q^-1) = {x}");
    println!("x* = {}", star_scalar(&x));
    let v = eval_scalar(&x, 0.31);
    println!("x at θ = 0.31: {:.6} + {:.6}i", v.re, v.im);
    for m in [2, 4, 6] {
        println!(
            "x at a primitive {m}-th root of unity: {}",
            reduce_cyclotomic(&x, CyclotomicMode::new(m)?)
        );
    }
    // exponents are arbitrary precision
    println!(
        "q^(2^40) * q^-(2^40) = {}",
        &QScalar::q_pow(1 << 40) * &QScalar::q_pow(-(1 << 40))
    );
    Ok(())
}
