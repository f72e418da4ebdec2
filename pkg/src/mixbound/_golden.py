"""Golden figure bytes for the verify-paper replay.

Frozen output of render_polygon for the two built-in reference
hulls; regenerating and comparing byte-for-byte guards the figure
pipeline against accidental layout drift.
"""

FIGURE1_SVG = '<?xml version="1.0" encoding="UTF-8"?>\n<svg xmlns="http://www.w3.org/2000/svg" width="160" height="80" viewBox="0 0 160 80">\n<line x1="20" y1="60" x2="140" y2="60" stroke="#888888" stroke-width="1"/>\n<line x1="20" y1="60" x2="20" y2="20" stroke="#888888" stroke-width="1"/>\n<line x1="20" y1="20" x2="60" y2="60" stroke="#000000" stroke-width="2"/>\n<line x1="60" y1="60" x2="140" y2="20" stroke="#000000" stroke-width="2"/>\n<line x1="140" y1="20" x2="20" y2="20" stroke="#000000" stroke-width="2"/>\n<circle cx="20" cy="20" r="3" fill="#000000"/>\n<circle cx="60" cy="60" r="3" fill="#000000"/>\n<circle cx="140" cy="20" r="3" fill="#000000"/>\n<text x="26" y="54" font-family="serif" font-size="14" text-anchor="middle">F1</text>\n<text x="107" y="54" font-family="serif" font-size="14" text-anchor="middle">F2</text>\n<text x="80" y="6" font-family="serif" font-size="14" text-anchor="middle">F3</text>\n</svg>\n'

FIGURE4_SVG = '<?xml version="1.0" encoding="UTF-8"?>\n<svg xmlns="http://www.w3.org/2000/svg" width="280" height="160" viewBox="0 0 280 160">\n<line x1="20" y1="140" x2="260" y2="140" stroke="#888888" stroke-width="1"/>\n<line x1="20" y1="140" x2="20" y2="20" stroke="#888888" stroke-width="1"/>\n<line x1="20" y1="100" x2="260" y2="140" stroke="#000000" stroke-width="2"/>\n<line x1="260" y1="140" x2="220" y2="100" stroke="#000000" stroke-width="2"/>\n<line x1="220" y1="100" x2="140" y2="60" stroke="#000000" stroke-width="2"/>\n<line x1="140" y1="60" x2="20" y2="20" stroke="#000000" stroke-width="2"/>\n<line x1="20" y1="20" x2="20" y2="100" stroke="#000000" stroke-width="2"/>\n<circle cx="20" cy="100" r="3" fill="#000000"/>\n<circle cx="20" cy="20" r="3" fill="#000000"/>\n<circle cx="140" cy="60" r="3" fill="#000000"/>\n<circle cx="220" cy="100" r="3" fill="#000000"/>\n<circle cx="260" cy="140" r="3" fill="#000000"/>\n<text x="137.667" y="134" font-family="serif" font-size="14" text-anchor="middle">F1</text>\n<text x="254" y="106" font-family="serif" font-size="14" text-anchor="middle">F2</text>\n<text x="187" y="66" font-family="serif" font-size="14" text-anchor="middle">F3</text>\n<text x="84.667" y="26" font-family="serif" font-size="14" text-anchor="middle">F4</text>\n<text x="6" y="60" font-family="serif" font-size="14" text-anchor="middle">F5</text>\n</svg>\n'
