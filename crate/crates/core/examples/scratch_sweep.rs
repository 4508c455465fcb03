//! Temporary scratch: numeric answers for sweep-design questions.

use mtp_core::exact::int;
use mtp_core::*;
use num_traits::Signed;

fn main() {
    let t0 = std::time::Instant::now();
    // Full sweep k in [2,6], a in [2,40], mc <= 6.
    let mut total = 0u64;
    let mut exceeders = Vec::new();
    let mut attainers = Vec::new();
    let mut viol_l1 = 0;
    let mut viol_345 = 0;
    let mut n1_1_ge3_dneg: Vec<(u64, Signature, bool)> = Vec::new();
    for k in 2..=6u64 {
        let bounds = EnumBounds::new(k, 2, 40, 6).unwrap();
        let kk = int(k as i64);
        let target = ConjectureTarget::new(kk.clone()).unwrap();
        for s in enumerate_signatures(&bounds) {
            total += 1;
            let d = delta(&s);
            let sg = sigma(&s);
            let g = gamma(&s);
            let n = tile_count(&s);
            assert_eq!(&sg * &sg + &g, Ratio::from(n.clone()));
            assert_eq!(g * Ratio::from(s.a() * s.a()), Ratio::from(&d + s.a() * s.a()));
            if !delta_implies_below_target(&s, &kk).unwrap() {
                viol_l1 += 1;
            }
            let exceeds = target.exceeded_by(&s).unwrap();
            let attains = target.attained_by(&s).unwrap();
            if exceeds {
                exceeders.push((k, s.clone(), d.clone()));
            }
            if attains {
                attainers.push((k, s.clone()));
            }
            if s.class_count() >= 3 && s.n1() >= &int(2) && d.is_negative() {
                viol_345 += 1;
            }
            if s.class_count() >= 3 && s.n1() == &int(1) && d.is_negative() {
                n1_1_ge3_dneg.push((k, s.clone(), exceeds));
            }
        }
    }
    println!("full sweep total: {total}  ({:?})", t0.elapsed());
    println!("lemma1 violations: {viol_l1}");
    println!("3+class n1>=2 delta<0 violations: {viol_345}");
    println!("attainers:");
    for (k, s) in &attainers {
        println!("  k={k} {s}");
    }
    println!("exceeders:");
    for (k, s, d) in &exceeders {
        println!("  k={k} {s} delta={d} classes={} n1={}", s.class_count(), s.n1());
    }
    println!(
        ">=3-class n1=1 delta<0: {} total, exceeding: {}",
        n1_1_ge3_dneg.len(),
        n1_1_ge3_dneg.iter().filter(|x| x.2).count()
    );
    for (k, s, e) in n1_1_ge3_dneg.iter().take(12) {
        println!("  k={k} {s} exceeds={e} sigma={}", ratio_string(&sigma(s)));
    }

    // Q3: k=2, a<=12: any >=3-class n1=1 delta<0?
    let b = EnumBounds::new(2, 2, 12, 6).unwrap();
    let q3: Vec<_> = enumerate_signatures(&b)
        .filter(|s| s.class_count() >= 3 && s.n1() == &int(1) && delta(s).is_negative())
        .collect();
    println!("k=2 a<=12, >=3cl n1=1 delta<0: {}", q3.len());
    for s in &q3 {
        println!(
            "   {s} sigma={} exceeds={}",
            ratio_string(&sigma(&s)),
            exceeds_conjecture(&s, &int(2)).unwrap()
        );
    }

    // Q4: l2 sweep: k in [2,10], a in [2,60], two-class only.
    let mut two_total = 0u64;
    let mut bad = Vec::new();
    let mut fam = Vec::new();
    let mut n1_1_exceed = Vec::new();
    let mut seen_a5 = false;
    for k in 2..=10u64 {
        let bounds = EnumBounds::new(k, 2, 60, 2)
            .unwrap()
            .with_class_count(CountFilter::Exactly(2));
        let target = ConjectureTarget::new(int(k as i64)).unwrap();
        for s in enumerate_signatures(&bounds) {
            two_total += 1;
            let exceeds = target.exceeded_by(&s).unwrap();
            let attains = target.attained_by(&s).unwrap();
            if s.n1() >= &int(2) {
                if exceeds || attains {
                    if attains {
                        fam.push((k, s.clone()));
                    }
                    if exceeds {
                        bad.push((k, s.clone()));
                    }
                }
            } else if exceeds {
                n1_1_exceed.push((k, s.clone()));
            }
            if s == Signature::from_ints(5, &[(1, 17), (2, 2)]).unwrap() {
                seen_a5 = true;
                println!("a=5 case present at k={k}, delta={}", delta(&s));
            }
        }
    }
    println!("two-class sweep total: {two_total}");
    println!("n1>=2 exceeders (must be none): {}", bad.len());
    println!("n1>=2 attainers:");
    for (k, s) in &fam {
        println!("  k={k} {s}");
    }
    println!("n1=1 exceeders (two-class):");
    for (k, s) in &n1_1_exceed {
        println!("  k={k} {s} sigma={}", ratio_string(&sigma(s)));
    }
    println!("a=5 (1,17),(2,2) seen: {seen_a5}");

    // Q5: mod-rule nonexistence within sweeps.
    let mut cnt_m3n2 = 0;
    let mut cnt_n2_1 = 0;
    for k in 2..=10u64 {
        let bounds = EnumBounds::new(k, 2, 60, 2)
            .unwrap()
            .with_class_count(CountFilter::Exactly(2));
        for s in enumerate_signatures(&bounds) {
            let c = s.classes();
            if c[1].m() == &int(3) && c[0].n() == &int(2) {
                cnt_m3n2 += 1;
            }
            if c[1].m() == &int(2) && c[1].n() == &int(1) {
                cnt_n2_1 += 1;
            }
        }
    }
    let mut cnt_mod4 = 0;
    let mut cnt_37 = 0;
    let mut cnt_223_anym = 0;
    for k in 2..=6u64 {
        let bounds = EnumBounds::new(k, 2, 40, 3)
            .unwrap()
            .with_class_count(CountFilter::Exactly(3));
        for s in enumerate_signatures(&bounds) {
            let c = s.classes();
            let (n1, n2, n3) = (c[0].n(), c[1].n(), c[2].n());
            let (m2, m3) = (c[1].m(), c[2].m());
            if n1 == &int(2) && m2 == &int(2) && m3 == &int(3) && n3 == &int(1) {
                cnt_mod4 += 1;
            }
            if n1 == &int(2) && n2 == &int(2) && n3 == &int(3) {
                cnt_223_anym += 1;
                if m2 == &int(2) && m3 == &int(3) {
                    cnt_37 += 1;
                }
            }
        }
    }
    println!("mod-rule counts (want 0): m3n2={cnt_m3n2} n2_1={cnt_n2_1} mod4={cnt_mod4} 37={cnt_37} (2,2,3 any m: {cnt_223_anym})");

    // Q7 examples.
    let b = EnumBounds::new(2, 4, 4, 4).unwrap();
    println!("enumerate k2 a4: {}", count_signatures(&b));
    let b = EnumBounds::new(2, 2, 7, 6).unwrap();
    println!("k=2 a<=7 all: {}", count_signatures(&b));
    for s in enumerate_signatures(&b) {
        println!(
            "   {s} verdict={} theorem_filter={}",
            resolve_verdict(&s).unwrap(),
            theorem_filter(&s).unwrap()
        );
    }
    println!("total elapsed {:?}", t0.elapsed());
}
