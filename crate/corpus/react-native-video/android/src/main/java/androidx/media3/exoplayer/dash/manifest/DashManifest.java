package androidx.media3.exoplayer.dash.manifest;

public class DashManifest {
    public DashManifest() {

    }

    public int getPeriodCount() {
        return 0;
    }

    public Period getPeriod(int index) {
        return null;
    }
}
