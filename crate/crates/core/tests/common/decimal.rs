//! Exact decimal arithmetic on digit strings, for checking formatted output.

/// `digits × c`, computed exactly and rounded half-up to `sig` significant
/// digits, in the same positional form as `graphvol_core::sig15`.
pub fn scaled_sig(digits: &str, c: u64, sig: usize) -> String {
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    let mut mant: Vec<u64> = int.bytes().chain(frac.bytes()).map(|b| u64::from(b - b'0')).collect();
    let mut carry = 0u64;
    for d in mant.iter_mut().rev() {
        let v = *d * c + carry;
        *d = v % 10;
        carry = v / 10;
    }
    let mut int_len = int.len();
    while carry > 0 {
        mant.insert(0, carry % 10);
        carry /= 10;
        int_len += 1;
    }
    while mant.len() > 1 && mant[0] == 0 && int_len > 1 {
        mant.remove(0);
        int_len -= 1;
    }
    assert!(mant[0] != 0 && int_len >= 1, "only values ≥ 1 are needed");

    let round_up = mant.get(sig).is_some_and(|&d| d >= 5);
    let mut kept: Vec<u64> = mant.iter().copied().take(sig).collect();
    kept.resize(sig.max(int_len), 0);
    if round_up {
        let mut i = sig - 1;
        loop {
            kept[i] += 1;
            if kept[i] < 10 {
                break;
            }
            kept[i] = 0;
            if i == 0 {
                kept.insert(0, 1);
                int_len += 1;
                break;
            }
            i -= 1;
        }
    }
    let text: String = kept.iter().map(|d| char::from(b'0' + *d as u8)).collect();
    let (i, f) = text.split_at(int_len);
    let f = f.trim_end_matches('0');
    if f.is_empty() {
        i.to_string()
    } else {
        format!("{i}.{f}")
    }
}
