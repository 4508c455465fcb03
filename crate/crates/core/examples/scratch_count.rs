//! Temporary scratch: enumeration sizes per k.

use mtp_core::*;

fn main() {
    for (k, amax, mc) in [
        (2u64, 40u64, 6usize),
        (3, 40, 6),
        (4, 40, 6),
        (5, 40, 6),
        (6, 30, 6),
        (6, 35, 6),
        (6, 40, 4),
        (6, 40, 5),
        (6, 40, 6),
        (2, 60, 2),
        (10, 60, 2),
    ] {
        let t = std::time::Instant::now();
        let b = EnumBounds::new(k, 2, amax, mc).unwrap();
        let c = count_signatures(&b);
        println!("k={k} a<={amax} mc={mc}: {c} sigs in {:?}", t.elapsed());
    }
}
