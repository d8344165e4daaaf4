import { ApiClient } from "./api";
import { createApp } from "./app";
import "./style.css";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");

const client = new ApiClient("");
const app = createApp(root, client);
app.go.login();
