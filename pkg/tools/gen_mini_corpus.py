#!/usr/bin/env python3
"""Regenerate the bundled mini corpus and gold set.

Deterministic: running it twice produces identical files. Output goes to
src/rack/data/mini_corpus.jsonl and src/rack/data/mini_gold.tsv.
"""

from __future__ import annotations

import json
from pathlib import Path

TOPICS = [
    (
        "hashing",
        [
            "Generating MD5 hash of a Java string",
            "How to generate MD5 checksum for a file in Java?",
            "Compute MD5 hash from byte array",
            "MD5 hashing a password in Java",
            "Java: create MD5 hash of a string",
            "Get MD5 checksum of file contents",
        ],
        '<p>Use <code>MessageDigest</code>:</p>'
        '<pre><code>MessageDigest md = MessageDigest.getInstance("MD5");\n'
        "byte[] digest = md.digest(text.getBytes());\n"
        "String hex = new BigInteger(1, digest).toString(16);</code></pre>",
    ),
    (
        "html",
        [
            "How to parse HTML in Java?",
            "Java HTML parser recommendation",
            "Extract links from an HTML page with a parser",
            "Parsing HTML document and selecting elements",
            "Read text from HTML file in Java",
            "Best way to parse malformed HTML",
        ],
        "<p>Jsoup handles real-world HTML:</p>"
        '<pre><code>Document doc = Jsoup.parse(html);\nElements links = doc.select("a");\n'
        'for (Element link : links) { System.out.println(link.attr("href")); }</code></pre>',
    ),
    (
        "file-read",
        [
            "How do I read a text file line by line in Java?",
            "Reading file contents into a String",
            "Java read file with BufferedReader",
            "Fastest way to read a large text file",
            "Read file line by line and print each line",
            "Load a text file from disk in Java",
        ],
        "<pre><code>File input = new File(path);\n"
        "BufferedReader reader = new BufferedReader(new FileReader(input));\n"
        "String line;\nwhile ((line = reader.readLine()) != null) { process(line); }</code></pre>",
    ),
    (
        "file-write",
        [
            "Write a String to a text file in Java",
            "How to append text to an existing file?",
            "Java write lines to file",
            "Saving data to a file in Java",
            "Create and write to a new file",
        ],
        "<pre><code>File out = new File(path);\n"
        "PrintWriter writer = new PrintWriter(new BufferedWriter(new FileWriter(out, true)));\n"
        'writer.println("data");\nwriter.close();</code></pre>',
    ),
    (
        "gzip",
        [
            "How do I decompress a GZip file in Java?",
            "Decompressing gzip compressed data",
            "Java gzip decompress byte array",
            "Unzip a .gz file programmatically",
            "Reading gzip compressed text file",
        ],
        "<pre><code>GZIPInputStream in = new GZIPInputStream(new FileInputStream(source));\n"
        "FileOutputStream out = new FileOutputStream(target);\n"
        "byte[] buffer = new byte[4096];\nint n;\n"
        "while ((n = in.read(buffer)) &gt; 0) { out.write(buffer, 0, n); }</code></pre>",
    ),
    (
        "zip",
        [
            "How to create a zip archive in Java?",
            "Zip multiple files into one archive",
            "Java compress folder to zip",
            "Extract zip file contents",
            "Add files to an existing zip archive",
        ],
        "<pre><code>ZipOutputStream zip = new ZipOutputStream(new FileOutputStream(archive));\n"
        "zip.putNextEntry(new ZipEntry(name));\nzip.write(bytes);\nzip.closeEntry();\n"
        "ZipFile existing = new ZipFile(archive);</code></pre>",
    ),
    (
        "http",
        [
            "Download a file from a URL in Java",
            "Java HTTP GET request example",
            "How to download a file over HTTP programmatically?",
            "Fetch JSON from a web service URL",
            "Read web page content into a String",
        ],
        '<pre><code>URL url = new URL(address);\n'
        "HttpURLConnection conn = (HttpURLConnection) url.openConnection();\n"
        "InputStream body = conn.getInputStream();\n"
        "BufferedReader reader = new BufferedReader(new InputStreamReader(body));</code></pre>",
    ),
    (
        "regex",
        [
            "How to match a regex pattern in Java?",
            "Validate email address with regular expression",
            "Java regex find all matches in a string",
            "Extract numbers from string using regex",
            "Replace text using a regular expression",
        ],
        '<pre><code>Pattern pattern = Pattern.compile("[0-9]+");\n'
        "Matcher matcher = pattern.matcher(text);\n"
        "while (matcher.find()) { System.out.println(matcher.group()); }</code></pre>",
    ),
    (
        "dates",
        [
            "How to format a date in Java?",
            "Convert String to Date in Java",
            "Format current date as yyyy-MM-dd",
            "Parsing a date string with custom pattern",
            "Get current date and time in Java",
            "Convert Date to formatted String",
        ],
        '<pre><code>SimpleDateFormat format = new SimpleDateFormat("yyyy-MM-dd");\n'
        "Date now = Calendar.getInstance().getTime();\n"
        "String text = format.format(now);\nDate parsed = format.parse(text);</code></pre>",
    ),
    (
        "sql",
        [
            "How to connect to a MySQL database in Java?",
            "Execute SQL query with JDBC",
            "Java database connection example",
            "Insert a row into a database table",
            "Read rows from a database query",
        ],
        "<pre><code>Connection conn = DriverManager.getConnection(url, user, password);\n"
        'PreparedStatement stmt = conn.prepareStatement("SELECT * FROM t WHERE id = ?");\n'
        "stmt.setInt(1, id);\nResultSet rows = stmt.executeQuery();</code></pre>",
    ),
    (
        "swing",
        [
            "How to create a window in Java Swing?",
            "Add a button to a JFrame",
            "Java Swing button click event",
            "Show a dialog box in a Swing application",
            "Create a simple GUI form in Java",
        ],
        '<pre><code>JFrame frame = new JFrame("Demo");\nJPanel panel = new JPanel();\n'
        'JButton button = new JButton("Click");\npanel.add(button);\nframe.add(panel);\n'
        "SwingUtilities.invokeLater(() -&gt; frame.setVisible(true));</code></pre>",
    ),
    (
        "sorting",
        [
            "How to sort a list of objects in Java?",
            "Sort ArrayList of custom objects by field",
            "Java sort list with comparator",
            "Sorting a collection in reverse order",
            "Sort a map by its values",
        ],
        "<pre><code>List&lt;Person&gt; people = new ArrayList&lt;&gt;();\n"
        "Collections.sort(people, new Comparator&lt;Person&gt;() {\n"
        "  public int compare(Person a, Person b) { return a.name.compareTo(b.name); }\n"
        "});</code></pre>",
    ),
    (
        "maps",
        [
            "How to iterate over a HashMap in Java?",
            "Loop through map keys and values",
            "Java map iteration best practice",
            "Get all keys from a HashMap",
            "Check if a map contains a key",
        ],
        "<pre><code>Map&lt;String, Integer&gt; map = new HashMap&lt;&gt;();\n"
        "Iterator&lt;Map.Entry&lt;String, Integer&gt;&gt; it = map.entrySet().iterator();\n"
        "while (it.hasNext()) { Entry&lt;String, Integer&gt; e = it.next(); }</code></pre>",
    ),
    (
        "threads",
        [
            "How to start a new thread in Java?",
            "Run a task in a background thread",
            "Java thread pool example",
            "Execute tasks concurrently with an executor",
            "Stop a running thread safely",
        ],
        "<pre><code>Runnable task = () -&gt; doWork();\nThread worker = new Thread(task);\n"
        "worker.start();\nExecutorService pool = Executors.newFixedThreadPool(4);\n"
        "pool.submit(task);</code></pre>",
    ),
    (
        "email",
        [
            "How to send an email in Java?",
            "Sending email with attachment in Java",
            "Send mail via SMTP server programmatically",
            "Java email sending example",
        ],
        "<pre><code>Session session = Session.getInstance(props);\n"
        "Message message = new MimeMessage(session);\n"
        'message.setSubject("Hello");\nTransport.send(message);</code></pre>',
    ),
    (
        "random",
        [
            "Generate random numbers in Java",
            "How to get a random integer in a range?",
            "Java random number between 1 and 100",
            "Generate a secure random token",
        ],
        "<pre><code>Random random = new Random();\nint value = random.nextInt(100) + 1;\n"
        "SecureRandom secure = new SecureRandom();\nbyte[] token = new byte[16];\n"
        "secure.nextBytes(token);</code></pre>",
    ),
    (
        "split",
        [
            "How to split a String in Java?",
            "Split string by comma into an array",
            "Java split string and trim whitespace",
            "Tokenize a sentence into words",
        ],
        '<pre><code>String csv = "a, b, c";\nString[] parts = csv.split("\\\\s*,\\\\s*");\n'
        "StringTokenizer tokens = new StringTokenizer(sentence);\n"
        "List&lt;String&gt; words = Arrays.asList(parts);</code></pre>",
    ),
    (
        "concat",
        [
            "Concatenate strings efficiently in Java",
            "How to build a long string in a loop?",
            "Java StringBuilder append example",
            "Join list of strings with a separator",
        ],
        "<pre><code>StringBuilder builder = new StringBuilder();\n"
        'for (String part : parts) { builder.append(part); }\n'
        'StringJoiner joiner = new StringJoiner(", ");\n'
        "String result = builder.toString();</code></pre>",
    ),
    (
        "images",
        [
            "How to resize an image in Java?",
            "Load an image from file and scale it",
            "Java convert image format png to jpg",
            "Crop an image programmatically",
        ],
        '<pre><code>BufferedImage image = ImageIO.read(new File("in.png"));\n'
        "BufferedImage scaled = new BufferedImage(w, h, image.getType());\n"
        "Graphics2D canvas = scaled.createGraphics();\n"
        'canvas.drawImage(image, 0, 0, w, h, null);\nImageIO.write(scaled, "jpg", out);</code></pre>',
    ),
    (
        "xml",
        [
            "How to parse an XML file in Java?",
            "Read XML document and get elements",
            "Java XML parsing with DOM",
            "Extract values from XML nodes",
        ],
        "<pre><code>DocumentBuilderFactory factory = DocumentBuilderFactory.newInstance();\n"
        "DocumentBuilder builder = factory.newDocumentBuilder();\n"
        "Document doc = builder.parse(file);\n"
        'NodeList nodes = doc.getElementsByTagName("item");</code></pre>',
    ),
    (
        "sockets",
        [
            "How to open a TCP socket connection in Java?",
            "Java socket client server example",
            "Send data over a socket connection",
            "Listen on a port for incoming connections",
        ],
        '<pre><code>ServerSocket server = new ServerSocket(8080);\nSocket client = server.accept();\n'
        "PrintWriter out = new PrintWriter(client.getOutputStream(), true);\n"
        "BufferedReader in = new BufferedReader(new InputStreamReader(client.getInputStream()));</code></pre>",
    ),
    (
        "json",
        [
            "How to parse JSON in Java?",
            "Convert JSON string to a Java object",
            "Read values from a JSON response",
            "Create a JSON object and add fields",
        ],
        '<pre><code>JSONObject object = new JSONObject(payload);\n'
        'JSONArray items = object.getJSONArray("items");\n'
        'String name = object.getString("name");</code></pre>',
    ),
]

GOLD = [
    ("generate md5 hash of a string", ["MessageDigest"]),
    ("parse html page and extract links", ["Jsoup", "Document"]),
    ("read text file line by line", ["BufferedReader", "FileReader"]),
    ("decompress gzip file", ["GZIPInputStream"]),
    ("download file from url", ["URL", "HttpURLConnection"]),
    ("match regex pattern in string", ["Pattern", "Matcher"]),
    ("format date as string", ["SimpleDateFormat", "Date"]),
    ("sort list of objects", ["Collections", "Comparator"]),
    ("send email via smtp", ["MimeMessage", "Transport"]),
    ("start background thread", ["Thread", "Runnable"]),
]


def main() -> None:
    data_dir = Path(__file__).resolve().parent.parent / "src" / "rack" / "data"
    corpus_path = data_dir / "mini_corpus.jsonl"
    gold_path = data_dir / "mini_gold.tsv"

    lines = []
    doc_id = 0
    for topic, titles, answer in TOPICS:
        for title in titles:
            doc_id += 1
            lines.append(
                json.dumps(
                    {
                        "id": f"q{doc_id:04d}",
                        "title": title,
                        "accepted_answer_html": answer,
                        "tags": ["java", topic],
                    },
                    ensure_ascii=False,
                    sort_keys=True,
                )
            )
    corpus_path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    gold_lines = ["# query<TAB>comma-separated relevant API classes"]
    for query, apis in GOLD:
        gold_lines.append(f"{query}\t{','.join(apis)}")
    gold_path.write_text("\n".join(gold_lines) + "\n", encoding="utf-8")

    print(f"wrote {doc_id} documents to {corpus_path}")
    print(f"wrote {len(GOLD)} gold queries to {gold_path}")


if __name__ == "__main__":
    main()
