#![no_main]

use libfuzzer_sys::fuzz_target;
use markovmaps::dynmaps::MapFile;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(file) = MapFile::parse(text) {
        let n = file.d * file.d;
        assert_eq!(file.matrix.shape(), (n, n));
        assert!(file.matrix.is_finite());
        assert_eq!(file.to_amap().dim(), file.d);
    }
});
