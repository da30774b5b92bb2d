use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::logic::alphabet::{FiniteWord, Letter};

/// `u ⋈ v`: first letters united, tails interleaved in order with coincident placements merged.
pub fn merged_interleavings(u: &FiniteWord, v: &FiniteWord) -> Result<BTreeSet<FiniteWord>> {
    let (Some(a), Some(b)) = (u.first(), v.first()) else {
        return Err(Error::Invalid("merged interleaving of an empty word".into()));
    };
    let mut out = BTreeSet::new();
    let mut buf = vec![a.union(b)];
    merge(&u.letters()[1..], &v.letters()[1..], &mut buf, &mut out);
    Ok(out)
}

fn merge(x: &[Letter], y: &[Letter], buf: &mut Vec<Letter>, out: &mut BTreeSet<FiniteWord>) {
    match (x.split_first(), y.split_first()) {
        (None, None) => {
            out.insert(FiniteWord(buf.clone()));
        }
        (Some((&a, xs)), None) => step(a, xs, y, buf, out),
        (None, Some((&b, ys))) => step(b, x, ys, buf, out),
        (Some((&a, xs)), Some((&b, ys))) => {
            step(a, xs, y, buf, out);
            step(b, x, ys, buf, out);
            step(a.union(b), xs, ys, buf, out);
        }
    }
}

fn step(l: Letter, x: &[Letter], y: &[Letter], buf: &mut Vec<Letter>, out: &mut BTreeSet<FiniteWord>) {
    buf.push(l);
    merge(x, y, buf, out);
    buf.pop();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::Alphabet;

    #[test]
    fn worked_examples() {
        let ap = Alphabet::parse("p,q").unwrap();
        let w = |s| ap.parse_word(s).unwrap();
        let single = merged_interleavings(&w("{p}"), &w("{q}")).unwrap();
        assert_eq!(single.into_iter().collect::<Vec<_>>(), [w("{p,q}")]);
        let three = merged_interleavings(&w("{}.{p}"), &w("{}.{q}")).unwrap();
        let shown: BTreeSet<_> = three.iter().map(|x| ap.fmt_word(x)).collect();
        let expected: BTreeSet<_> = ["{}.{p}.{q}", "{}.{q}.{p}", "{}.{p,q}"].map(String::from).into();
        assert_eq!(shown, expected);
        assert!(merged_interleavings(&FiniteWord::empty(), &w("{p}")).is_err());
    }
}
