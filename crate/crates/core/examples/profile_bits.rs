use quartic::num::ToleranceProfile;
use quartic::quartic::curves;
use std::time::Instant;

fn main() {
    let profile = ToleranceProfile::new(256);
    for (name, f) in [
        ("edge", curves::edge()),
        ("vinnikov", curves::vinnikov_example()),
        ("fermat", curves::fermat()),
    ] {
        let t = Instant::now();
        let r = quartic::bitangents::compute_bitangents(&f, &profile);
        match r {
            Ok(b) => println!(
                "{name}: {} bitangents ({} real) in {:?}",
                b.len(),
                b.iter().filter(|x| x.is_real).count(),
                t.elapsed()
            ),
            Err(e) => println!("{name} error after {:?}: {e}", t.elapsed()),
        }
    }
}
