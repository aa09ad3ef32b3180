#![no_main]

use libfuzzer_sys::fuzz_target;
use markovmaps::dynmaps::{diagnose, kraus_from_bmap, MapFile};

// Larger maps are valid input but make each run too slow to be useful.
const MAX_DIM: usize = 4;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(file) = MapFile::parse(text) else {
        return;
    };
    if file.d > MAX_DIM {
        return;
    }
    let a = file.to_amap();
    let diag = diagnose(&a, 1e-10, 16, 1);
    assert!(diag.tp_defect >= 0.0 && diag.herm_defect >= 0.0);
    if diag.is_cp {
        let _ = kraus_from_bmap(&a.to_bmap(), 1e-10);
    }
});
