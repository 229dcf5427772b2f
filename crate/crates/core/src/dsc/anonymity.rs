use crate::graph::DegreeSequence;

/// Every occurring value occurs at least `k_anon` times.
pub fn anonymity_fulfills(seq: &DegreeSequence, k_anon: usize) -> bool {
    let values = seq.values();
    let mut i = 0;
    while i < values.len() {
        let run = values[i..].iter().take_while(|&&d| d == values[i]).count();
        if run < k_anon {
            return false;
        }
        i += run;
    }
    true
}

/// Increments with total `target` making the completed sequence
/// `k_anon`-anonymous, with no completed value above `delta`.
///
/// Some optimal assignment gives the final values in the same order as the
/// original degrees (swapping two inverted values keeps both admissible and
/// the total unchanged). Equal final values can then be cut into contiguous
/// runs of length `k_anon..2*k_anon`, so the DP walks the ascending order and
/// places one run at a time, tracking the increment spent so far.
pub fn anonymity_nsc(
    degrees: &[usize],
    k_anon: usize,
    target: usize,
    delta: usize,
) -> Option<Vec<usize>> {
    let n = degrees.len();
    if n == 0 {
        return (target == 0).then(Vec::new);
    }
    let k = k_anon.max(1);
    if k > n || degrees.iter().any(|&d| d > delta) {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| degrees[i]);
    let sorted: Vec<usize> = order.iter().map(|&i| degrees[i]).collect();
    let mut prefix = vec![0usize; n + 1];
    for (i, &d) in sorted.iter().enumerate() {
        prefix[i + 1] = prefix[i] + d;
    }

    let w = target + 1;
    let mut reach = vec![false; (n + 1) * w];
    // parent[end * w + s] = (start, value) of the run ending at `end`.
    let mut parent = vec![(0usize, 0usize); (n + 1) * w];
    reach[0] = true;
    for end in k..=n {
        for len in k..=(2 * k - 1).min(end) {
            let start = end - len;
            let seg = prefix[end] - prefix[start];
            for v in sorted[end - 1]..=delta {
                let cost = v * len - seg;
                if cost > target {
                    break;
                }
                for s in 0..=target - cost {
                    let to = end * w + s + cost;
                    if reach[start * w + s] && !reach[to] {
                        reach[to] = true;
                        parent[to] = (start, v);
                    }
                }
            }
        }
    }
    if !reach[n * w + target] {
        return None;
    }

    let mut out = vec![0; n];
    let (mut end, mut s) = (n, target);
    while end > 0 {
        let (start, v) = parent[end * w + s];
        for pos in start..end {
            out[order[pos]] = v - sorted[pos];
            s -= v - sorted[pos];
        }
        end = start;
    }
    debug_assert_eq!(s, 0);
    Some(out)
}
