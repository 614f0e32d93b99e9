use super::{transport_pair, Link, Side, SimilarityChain};
use crate::error::Result;
use crate::maps::GraphIso;

/// Removes redundant pairs until the link sides alternate, starting and
/// ending with a dual link (so the pair count is even, or one).
///
/// Middle rule: two consecutive links on the same side collapse into one and
/// the pair between them is dropped. End rule: a leading (trailing) primal
/// link is absorbed by carrying the neighbouring pair's embedding onto the
/// exact end primal. The first and last primal graphs and the associated
/// primal 2-isomorphism are preserved.
pub fn compress_chain(chain: &SimilarityChain) -> Result<SimilarityChain> {
    let mut pairs = chain.pairs.clone();
    let mut links = chain.links.clone();
    loop {
        if let Some(i) = (0..links.len().saturating_sub(1)).find(|&i| links[i].side == links[i + 1].side) {
            let iso = links[i].iso.then(&links[i + 1].iso)?;
            let side = links[i].side;
            links.splice(i..i + 2, [Link { side, iso }]);
            pairs.remove(i + 1);
            continue;
        }
        let n = pairs.len();
        if n == 2 && links[0].side == Side::Primal {
            // Turn the primal link into a dual one on the exact end graph.
            let target = pairs[1].primal.clone();
            let (moved, dual_iso) = transport_pair(&pairs[0], &links[0].iso, &target)?;
            pairs[1] = moved;
            links[0] = Link::dual(dual_iso);
            continue;
        }
        if n >= 3 && links[0].side == Side::Primal {
            // pairs[1] moved onto the first primal replaces pairs[0] and pairs[1]
            let back = links[0].iso.inverse();
            let first = pairs[0].primal.clone();
            let (moved, dual_iso) = transport_pair(&pairs[1], &back, &first)?;
            let next = dual_iso.inverse().then(&links[1].iso)?;
            pairs.splice(0..2, [moved]);
            links.splice(0..2, [Link::dual(next)]);
            continue;
        }
        if n >= 3 && links[n - 2].side == Side::Primal {
            let last = pairs[n - 1].primal.clone();
            let (moved, dual_iso): (_, GraphIso) = transport_pair(&pairs[n - 2], &links[n - 2].iso, &last)?;
            let prev = links[n - 3].iso.then(&dual_iso)?;
            pairs.splice(n - 2..n, [moved]);
            links.splice(n - 3..n - 1, [Link::dual(prev)]);
            continue;
        }
        break;
    }
    let out = SimilarityChain::new(pairs, links)?;
    debug_assert_eq!(out.associated_2iso_primal, chain.associated_2iso_primal);
    Ok(out)
}
