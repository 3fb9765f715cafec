use bigal::hopf::{h_double, verify_hopf};
use bigal::Field;
use std::time::Instant;
fn main() {
    let n: u32 = std::env::args().nth(1).map_or(3, |a| a.parse().expect("n"));
    let f = Field::new(n).unwrap();
    let t = Instant::now();
    let h = h_double(&f, n).unwrap();
    println!("build {:?}", t.elapsed());
    let t = Instant::now();
    let r = verify_hopf(&h);
    println!("verify {:?}", t.elapsed());
    print!("{r}");
}
