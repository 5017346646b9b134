//! Flatten a RICO-style view hierarchy into a screen annotation.

use bbx::io::rico::parse_rico_screen;
use bbx::io::screen::screen_to_json;

fn main() -> bbx::Result<()> {
    let doc = serde_json::json!({
        "activity": { "root": {
            "bounds": [0, 0, 1440, 2560],
            "children": [
                { "bounds": [0, 0, 1440, 196], "componentLabel": "Toolbar", "children": [
                    { "bounds": [42, 56, 126, 140], "componentLabel": "Icon" },
                    null
                ]},
                { "bounds": [84, 420, 1356, 560], "componentLabel": "Input" },
                { "bounds": [84, 2380, 1356, 2520], "componentLabel": "Text Button" },
                // Unlabeled containers are structure, not elements.
                { "bounds": [0, 196, 1440, 2560], "children": [
                    { "bounds": [1200, 2400, 1600, 2800], "componentLabel": "Image" }
                ]}
            ]
        }}
    });
    let screen = parse_rico_screen(&doc, 1440.0, 2560.0)?;
    print!("{}", screen_to_json(&screen));
    Ok(())
}
