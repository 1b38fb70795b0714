import { ApiClient } from "./api.js";
import { buildApp } from "./ui.js";

// Same-origin by default; point at another host with ?api=http://host:port
const api = new URLSearchParams(location.search).get("api") ?? "";
buildApp(document.getElementById("app")!, new ApiClient(api));
