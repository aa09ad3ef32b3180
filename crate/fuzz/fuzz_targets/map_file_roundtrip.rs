#![no_main]

use libfuzzer_sys::fuzz_target;
use markovmaps::dynmaps::MapFile;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(file) = MapFile::parse(text) else {
        return;
    };
    let again = MapFile::parse(&file.to_json_string()).expect("serialized map file parses");
    assert_eq!(again, file);
});
