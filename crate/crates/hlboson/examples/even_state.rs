//! The exchange lemma for the even-state covector.

use hlboson::tboson::even_state::states_up_to;
use hlboson::tboson::{check_even_state_exchange, even_coefficient, BosonState};

fn main() {
    let s = BosonState { occ: vec![2, 0, 2], shifted0: false };
    println!("<e| coefficient of {:?}: {:?}", s.occ, even_coefficient(&s).map(|c| c.to_string()));
    let odd = BosonState { occ: vec![1, 2], shifted0: false };
    println!("<e| coefficient of {:?}: {:?}", odd.occ, even_coefficient(&odd).map(|c| c.to_string()));

    for (lo, shifted) in [(0, false), (-2, true)] {
        let states = states_up_to(3, lo, 3, shifted);
        let bad = states.iter().filter(|mu| check_even_state_exchange(mu).is_err()).count();
        println!("shifted = {shifted}: {} states, {bad} failures", states.len());
    }
}
