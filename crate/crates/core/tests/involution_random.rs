//! Randomized involution checks beyond the exhaustively audited sizes:
//! seeded random pairs at n = 5 and 6 must still form two-element orbits
//! whose signed terms cancel exactly in the ring.

use lambda_pfaffian::involution::{phi, term_polynomial, term_weight, MatchingPair, Part};
use lambda_pfaffian::matchings::PerfectMatching;
use lambda_pfaffian::pfaffian::SkewMatrix;

struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// A uniform random perfect matching of `ground`: shuffle, pair up
/// consecutive elements, canonicalize.
fn random_matching(rng: &mut SplitMix64, ground: &[u32]) -> PerfectMatching {
    let mut v = ground.to_vec();
    for i in (1..v.len()).rev() {
        v.swap(i, rng.below(i + 1));
    }
    let pairs: Vec<(u32, u32)> = v
        .chunks(2)
        .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
        .collect();
    PerfectMatching::new(pairs).unwrap()
}

fn ground_minus(n2: u32, removed: &[u32]) -> Vec<u32> {
    (1..=n2).filter(|v| !removed.contains(v)).collect()
}

#[test]
fn phi_cancels_random_pairs_at_larger_sizes() {
    let mut rng = SplitMix64(0x1a2b3c4d);
    for n in 5..=6u32 {
        let n2 = 2 * n;
        let entries = SkewMatrix::generic(n);
        for part in Part::ALL {
            for _ in 0..25 {
                let pi = random_matching(&mut rng, &ground_minus(n2, &part.pi_removed(n2)));
                let m = random_matching(&mut rng, &ground_minus(n2, &part.m_removed(n2)));
                let x = MatchingPair::new(part, pi, m, n).unwrap();
                let y = phi(&x).expect("phi total on valid pairs");
                assert_ne!(y, x, "fixed point at n={n}");
                assert_eq!(phi(&y).unwrap(), x, "not involutive at n={n}");
                let (wx, wy) = (term_weight(&x), term_weight(&y));
                assert_eq!(wx.sign, -wy.sign);
                assert_eq!(wx.lambda_exp2, wy.lambda_exp2);
                let sum = &term_polynomial(&x, &entries) + &term_polynomial(&y, &entries);
                assert!(sum.is_zero(), "no cancellation at n={n}");
            }
        }
    }
}
