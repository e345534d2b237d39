package androidx.media3.exoplayer.dash;

import android.net.Uri;

import androidx.media3.datasource.DataSource;
import androidx.media3.exoplayer.dash.manifest.DashManifest;

public class DashUtil {
    public static DashManifest loadManifest(DataSource ds, Uri uri) {
        return null;
    }
}
